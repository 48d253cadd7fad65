#include "limhodge/hodge.hpp"

#include <algorithm>
#include <exception>

#include "limhodge/ehrhart.hpp"
#include "limhodge/errors.hpp"

namespace limhodge {

namespace {

constexpr int kU = static_cast<int>(Var::U);
constexpr int kV = static_cast<int>(Var::V);
constexpr int kW = static_cast<int>(Var::W);
constexpr int kL = static_cast<int>(Var::L);

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

LaurentPoly uv() { return LaurentPoly::mono({{Var::U, 1}, {Var::V, 1}}); }
LaurentPoly uw() { return LaurentPoly::mono({{Var::U, 1}, {Var::W, 1}}); }
LaurentPoly uvw2() { return LaurentPoly::mono({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}}); }

Exponent exps(int u, int v, int w) {
  Exponent e{};
  e[kU] = u;
  e[kV] = v;
  e[kW] = w;
  return e;
}

// Solves x E = (x - 1)^d + (-1)^{d+1} h for E, x the monomial with exponent e.
LaurentPoly solve_E(const LaurentPoly& x, const Exponent& e, int d, const LaurentPoly& h) {
  LaurentPoly rhs = (x - 1).pow(static_cast<unsigned>(d)) + LaurentPoly(static_cast<long>(sign(d + 1))) * h;
  return divide_by_monomial_exact(rhs, e);
}

int resolve(const InvariantBundle& b, int face) { return face < 0 ? b.top() : face; }

// E(V_F; u, v) for a polytope F.
LaurentPoly hodge_deligne_uv(const LatticePolytope& f) {
  return substitute(hodge_deligne(f), subs::rename(Var::W, Var::V));
}

}  // namespace

LaurentPoly nearby_fiber_from_cells(const std::vector<TropicalCell>& cells) {
  LaurentPoly total;
  for (const auto& c : cells) {
    if (!c.bounded) continue;
    total += LaurentPoly(static_cast<long>(sign(c.dim))) * c.cls;
  }
  return total;
}

std::vector<TropicalCell> tropical_cells(const Subdivision& s) {
  const int n = s.polytope().dim();
  const LaurentPoly uv1 = uv() - 1;
  std::vector<TropicalCell> out;
  for (int c = 0; c < s.num_cells(); ++c) {
    const int d = s.cell(c).dim;
    if (d < 1) continue;
    TropicalCell t;
    t.dim = n - d;
    t.bounded = s.is_interior(c);
    t.cls = hodge_deligne_uv(s.cell_polytope(c)) * uv1.pow(static_cast<unsigned>(n - d));
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<LaurentPoly> to_L_form(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != kU && i != kV && e[i] != 0) return std::nullopt;
    if (e[kU] != e[kV]) return std::nullopt;
    Exponent f{};
    f[kL] = e[kU];
    r.add_term(f, c);
  }
  return r;
}

LaurentPoly from_L_form(const LaurentPoly& p) {
  return substitute(p, Substitution{{Var::L, image_of({{Var::U, 1}, {Var::V, 1}})}});
}

LaurentPoly chi_y(const LatticePolytope& p) {
  if (p.is_empty()) throw InputError("chi_y of the empty polytope");
  return solve_E(LaurentPoly::var(Var::U), exps(1, 0, 0), p.dim(), h_star(p));
}

Integer euler_characteristic(const LatticePolytope& p) {
  if (p.is_empty()) throw InputError("Euler characteristic of the empty polytope");
  if (p.dim() == 0) return 0;  // empty hypersurface, as chi_y
  Integer vol = evaluate(h_star(p), {1, 1, 1, 1, 1});
  return sign(p.dim() + 1) > 0 ? vol : Integer(-vol);
}

LaurentPoly hodge_deligne(const LatticePolytope& p) {
  if (p.is_empty()) throw InputError("Hodge-Deligne polynomial of the empty polytope");
  LaurentPoly h = substitute(mixed_h_star(p.normalized()), subs::rename(Var::V, Var::W));
  return solve_E(uw(), exps(1, 0, 1), p.dim(), h);
}

LaurentPoly chi_y_cell_sum(const Subdivision& s) {
  const int n = s.polytope().dim();
  const LaurentPoly one_minus_u = LaurentPoly(1L) - LaurentPoly::var(Var::U);
  LaurentPoly total;
  for (int c = 1; c < s.num_cells(); ++c) {
    if (!s.is_interior(c)) continue;
    total += chi_y(s.cell_polytope(c)) * one_minus_u.pow(static_cast<unsigned>(n - s.cell(c).dim));
  }
  return total;
}

LaurentPoly refined_E(const InvariantBundle& b, int face) {
  const int q = resolve(b, face);
  if (q == b.subdivision().faces().bottom()) throw InputError("refined E of the empty face");
  return solve_E(uvw2(), exps(1, 1, 2), b.subdivision().faces().dim(q), b.refined(q));
}

LaurentPoly nearby_fiber_E(const InvariantBundle& b, int face) {
  const Subdivision& s = b.subdivision();
  const int q = resolve(b, face);
  const int n = s.faces().dim(q);
  const LaurentPoly one_minus_uv = LaurentPoly(1L) - uv();
  LaurentPoly total;
  for (int c = 1; c < s.num_cells(); ++c) {
    if (s.cell(c).carrier != q) continue;
    total += hodge_deligne_uv(s.cell_polytope(c)) *
             one_minus_uv.pow(static_cast<unsigned>(n - s.cell(c).dim));
  }
  return total;
}

HodgeNumberTable refined_hodge_numbers(const InvariantBundle& b) {
  HodgeNumberTable t;
  t.dim = b.subdivision().polytope().dim();
  const LaurentPoly h = b.refined();
  if (h.coeff(Exponent{}) != 1) throw ComputationError("refined h* has constant term " + h.coeff(Exponent{}).get_str());
  t.refined = coefficient_table(h);
  for (const auto& [k, c] : t.refined) {
    if (c < 0) throw ComputationError("negative refined Hodge number");
    t.limit[{k[0], k[1]}] += c;
  }
  const LaurentPoly l = b.local_limit_mixed();
  for (const auto& [e, c] : l.terms()) {
    if (e[kU] < 1 || e[kV] < 1) throw ComputationError("l*(P,S) is not divisible by uv");
    if (c < 0) throw ComputationError("negative local Hodge number");
    t.local[{e[kU] - 1, e[kV] - 1}] = c;
  }
  return t;
}

LaurentPoly intersection_E(const InvariantBundle& b) {
  const LatticePolytope& p = b.subdivision().polytope();
  const int n = p.dim();
  LaurentPoly lef = substitute(e_int_lef(p), subs::t_to({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}}));
  LaurentPoly rhs = uvw2() * lef +
                    LaurentPoly(static_cast<long>(sign(n + 1))) * b.local_limit_mixed().shifted(exps(0, 0, n + 1));
  return divide_by_monomial_exact(rhs, exps(1, 1, 2));
}

LaurentPoly sum_over_strata_E_int(const InvariantBundle& b) {
  const Subdivision& s = b.subdivision();
  const FaceLattice& fl = s.faces();
  const EulerianPoset poset = fl.poset();
  const Substitution t_sub = subs::t_to({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}});
  const int n = fl.size();
  std::vector<LaurentPoly> terms(n);
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int q = 1; q < n; ++q) {
    try {
      if (fl.dim(q) == 0) continue;
      InvariantBundle face(s.restrict(q).normalized());
      terms[q] = refined_E(face) * substitute(poset.g_dual(q, fl.top()), t_sub);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  LaurentPoly total;
  for (const auto& t : terms) total += t;
  return total;
}

namespace {

LaurentPoly weighted_face_sum(const InvariantBundle& b, const TruncatedNormalFan& nf, const Fan& refinement,
                              const LaurentPoly& x, LaurentPoly (*stratum)(const InvariantBundle&, int)) {
  if (nf.faces.size() != b.subdivision().faces().size())
    throw InputError("fan and subdivision belong to different polytopes");
  if (!sigma_map_valid(refinement, nf.fan)) throw InputError("refinement sigma map is invalid");
  std::vector<LaurentPoly> weights = sigma_weights(nf.fan, refinement, x);
  LaurentPoly total;
  for (int c = 0; c < nf.fan.size(); ++c) {
    if (weights[c].is_zero()) continue;
    total += stratum(b, nf.cone_face[c]) * weights[c];
  }
  return total;
}

}  // namespace

LaurentPoly partial_compactification_E(const InvariantBundle& b, const TruncatedNormalFan& nf,
                                       const Fan& refinement) {
  return weighted_face_sum(b, nf, refinement, uvw2(), &refined_E);
}

LaurentPoly partial_compactification_psi(const InvariantBundle& b, const TruncatedNormalFan& nf,
                                         const Fan& refinement) {
  return weighted_face_sum(b, nf, refinement, uv(), &nearby_fiber_E);
}

LaurentPoly compact_psi_from_cells(const Subdivision& s) {
  const LaurentPoly one_minus_uv = LaurentPoly(1L) - uv();
  LaurentPoly total;
  for (int c = 1; c < s.num_cells(); ++c) {
    const int d = s.cell(c).dim;
    if (d == 0) continue;
    total += hodge_deligne_uv(s.cell_polytope(c)) *
             one_minus_uv.pow(static_cast<unsigned>(s.faces().dim(s.cell(c).carrier) - d));
  }
  return total;
}

namespace {

// sum_Q (-w)^{dim Q + 1} l*(Q, S|_Q) l*(Q^*; x), in the variables of `x`.
LaurentPoly stringy_sum(const InvariantBundle& b, bool generic) {
  const LatticePolytope& p = b.subdivision().polytope();
  if (!p.is_full_dimensional()) throw InputError("stringy E needs a full-dimensional polytope");
  DualPolytope dual = dual_polytope(p);
  if (!dual.reflexive) throw InputError("stringy E needs a reflexive polytope");
  const FaceLattice& fl = b.subdivision().faces();
  const FaceLattice dual_faces(*dual.polytope);
  const Substitution to_x = generic ? subs::t_to({{Var::U, 1}, {Var::W, 1}})
                                    : subs::t_to({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}});
  const LaurentPoly minus_w = -LaurentPoly::var(Var::W);
  LaurentPoly total;
  for (int q = 0; q < fl.size(); ++q) {
    const int qd = dual.face_map.at(q);
    LaurentPoly ld = local_h_star(dual.polytope->sub_polytope(dual_faces.vertices_of(qd)));
    ld = substitute(substitute(ld, subs::rename(Var::U, Var::T)), to_x);
    LaurentPoly l = b.local_limit_mixed(q);
    if (generic) l = substitute(l, subs::to_hodge_deligne());
    total += minus_w.pow(static_cast<unsigned>(fl.dim(q) + 1)) * l * ld;
  }
  return total;
}

}  // namespace

LaurentPoly stringy_E(const InvariantBundle& b) {
  return divide_by_monomial_exact(stringy_sum(b, false), exps(1, 1, 2));
}

LaurentPoly stringy_E_generic(const InvariantBundle& b) {
  return divide_by_monomial_exact(stringy_sum(b, true), exps(1, 0, 1));
}

std::optional<int> weak_lefschetz_violation(const LaurentPoly& e, int exponent, int dim_p) {
  const LaurentPoly lhs = e * uvw2();
  const LaurentPoly rhs = (uvw2() - 1).pow(static_cast<unsigned>(exponent));
  const int top = std::max(lhs.degree_in(Var::W), rhs.degree_in(Var::W));
  for (int k = dim_p + 2; k <= top; ++k)
    if (!(lhs.coeff_in(Var::W, k) == rhs.coeff_in(Var::W, k))) return k;
  return std::nullopt;
}

std::optional<int> weak_lefschetz_violation_uw(const LaurentPoly& e, int exponent, int dim_p) {
  const LaurentPoly lhs = e * uw();
  const LaurentPoly rhs = (uw() - 1).pow(static_cast<unsigned>(exponent));
  auto graded = [](const LaurentPoly& p, int k) {
    return p.filter([k](const Exponent& x) { return x[kU] + x[kW] == k; });
  };
  int top = dim_p + 1;
  for (const auto* p : {&lhs, &rhs})
    for (const auto& [x, c] : p->terms()) top = std::max(top, x[kU] + x[kW]);
  for (int k = dim_p + 2; k <= top; ++k)
    if (!(graded(lhs, k) == graded(rhs, k))) return k;
  return std::nullopt;
}

}  // namespace limhodge
