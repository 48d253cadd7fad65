#include "limhodge/invariants.hpp"

#include <exception>

#include "limhodge/errors.hpp"

namespace limhodge {

namespace {

LaurentPoly t_to_uv(const LaurentPoly& p) { return substitute(p, subs::t_to({{Var::U, 1}, {Var::V, 1}})); }
LaurentPoly t_to_uvw2(const LaurentPoly& p) {
  return substitute(p, subs::t_to({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}}));
}

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

// v^{k} * l(u v^-1) for l a polynomial in u.
LaurentPoly homogenize(const LaurentPoly& l, int k) {
  LaurentPoly r;
  for (const auto& [e, c] : l.terms()) {
    Exponent f{};
    f[static_cast<int>(Var::U)] = e[static_cast<int>(Var::U)];
    f[static_cast<int>(Var::V)] = k - e[static_cast<int>(Var::U)];
    r.add_term(f, c);
  }
  return r;
}

}  // namespace

InvariantBundle::InvariantBundle(Subdivision s)
    : s_(std::move(s)), face_poset_(std::make_shared<const EulerianPoset>(s_.faces().poset())) {}

template <class F>
LaurentPoly InvariantBundle::memo(std::map<int, LaurentPoly>& table, int key, F compute) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  LaurentPoly v = compute();
  std::lock_guard<std::mutex> lock(mu_);
  return table.try_emplace(key, std::move(v)).first->second;
}

LaurentPoly InvariantBundle::cell_h_star(int c) const {
  return memo(cell_h_, c, [&] { return h_star(s_.cell_polytope(c)); });
}

LaurentPoly InvariantBundle::cell_local_h_star(int c) const {
  return memo(cell_l_, c, [&] {
    if (c == 0) return LaurentPoly(1L);
    const EulerianPoset& b = s_.poset();
    const Substitution t_to_u = subs::rename(Var::T, Var::U);
    LaurentPoly l;
    const int d = s_.cell(c).dim;
    for (int g : b.down_set(c))
      l += LaurentPoly(static_cast<long>(sign(d - s_.cell(g).dim))) * cell_h_star(g) *
           substitute(b.g_dual(g, c), t_to_u);
    return l;
  });
}

LaurentPoly InvariantBundle::cell_mixed_h_star(int c) const {
  return memo(cell_mixed_, c, [&] {
    const EulerianPoset& b = s_.poset();
    const int dF = s_.cell(c).dim;
    LaurentPoly total;
    for (int g : b.down_set(c)) {
      const int dG = s_.cell(g).dim;
      // h of the link of G inside the trivial subdivision of F
      LaurentPoly r;
      for (int g2 : b.interval(g, c)) r += t_minus_one_pow(dF - s_.cell(g2).dim) * b.g(g, g2);
      Exponent sh{};
      sh[static_cast<int>(Var::T)] = dF - dG;
      LaurentPoly h = substitute(r, subs::invert({Var::T})).shifted(sh);
      total += homogenize(cell_local_h_star(g), dG + 1) * t_to_uv(h);
    }
    if (!total.is_polynomial()) throw ComputationError("mixed h* is not a polynomial");
    return total;
  });
}

LaurentPoly InvariantBundle::limit_mixed(int q) const {
  return memo(limit_, q, [&] {
    if (q == s_.faces().bottom()) return LaurentPoly(1L);
    LaurentPoly total;
    for (int c = 0; c < s_.num_cells(); ++c) {
      if (!s_.cell_in_face(c, q)) continue;
      total += homogenize(cell_local_h_star(c), s_.cell(c).dim + 1) *
               t_to_uv(link_h_polynomial(s_, c, q));
    }
    if (!total.is_polynomial()) throw ComputationError("limit mixed h* is not a polynomial");
    return total;
  });
}

LaurentPoly InvariantBundle::limit_mixed_via_cells(int q) const {
  if (q == s_.faces().bottom()) return LaurentPoly(1L);
  const LaurentPoly uv1 = LaurentPoly::mono({{Var::U, 1}, {Var::V, 1}}) - 1;
  const int dq = s_.faces().dim(q);
  LaurentPoly total;
  for (int c = 1; c < s_.num_cells(); ++c)
    if (s_.cell(c).carrier == q)
      total += uv1.pow(static_cast<unsigned>(dq - s_.cell(c).dim)) * cell_mixed_h_star(c);
  return total;
}

LaurentPoly InvariantBundle::local_limit_mixed(int q) const {
  return memo(local_, q, [&] {
    if (q == s_.faces().bottom()) return LaurentPoly(1L);
    const FaceLattice& fl = s_.faces();
    LaurentPoly total;
    for (int q2 : face_poset_->down_set(q))
      total += LaurentPoly(static_cast<long>(sign(fl.dim(q) - fl.dim(q2)))) * limit_mixed(q2) *
               t_to_uv(face_poset_->g_dual(q2, q));
    return total;
  });
}

LaurentPoly InvariantBundle::refined(int q) const {
  return memo(refined_, q, [&] {
    const FaceLattice& fl = s_.faces();
    LaurentPoly total;
    for (int q2 : face_poset_->down_set(q))
      total += local_limit_mixed(q2).shifted(Exponent{0, 0, fl.dim(q2) + 1, 0, 0}) *
               t_to_uvw2(face_poset_->g(q2, q));
    return total;
  });
}

void InvariantBundle::prefetch() const {
  const int n = s_.num_cells();
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < n; ++c) {
    try {
      cell_h_star(c);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

LaurentPoly mixed_h_star(const LatticePolytope& p) {
  if (p.is_empty()) return LaurentPoly(1L);
  InvariantBundle b(Subdivision::trivial(p));
  return b.limit_mixed();
}

std::vector<LaurentPoly> sigma_weights(const Fan& coarse, const Fan& refinement, const LaurentPoly& x) {
  if (!refinement.has_sigma()) throw InputError("refinement lacks a sigma map");
  std::vector<LaurentPoly> w(coarse.size());
  const LaurentPoly x1 = x - 1;
  for (int c = 0; c < refinement.size(); ++c) {
    const int s = refinement.sigma(c);
    w[s] += x1.pow(static_cast<unsigned>(coarse.cones()[s].dim - refinement.cones()[c].dim));
  }
  return w;
}

namespace {

LambdaPhi lambda_phi_impl(const InvariantBundle& b, const TruncatedNormalFan& nf, const Fan& refinement,
                          const LaurentPoly& x, bool mixed) {
  if (!refinement.is_simplicial()) throw InputError("Lambda needs a simplicial refinement");
  const int n = b.subdivision().polytope().dim();
  if (nf.faces.size() != b.subdivision().faces().size())
    throw InputError("fan and subdivision belong to different polytopes");
  std::vector<LaurentPoly> weights = sigma_weights(nf.fan, refinement, x);
  LambdaPhi out;
  for (int c = 0; c < nf.fan.size(); ++c) {
    const int q = nf.cone_face[c];
    LaurentPoly h = b.refined(q);
    if (mixed) h = substitute(h, subs::to_hodge_deligne());
    out.phi += LaurentPoly(static_cast<long>(sign(nf.faces.dim(q)))) * h * weights[c];
  }
  const LaurentPoly x1 = x - 1;
  for (const auto& cone : refinement.cones()) out.lambda += x1.pow(static_cast<unsigned>(n - cone.dim));
  out.lambda -= out.phi;
  return out;
}

}  // namespace

LambdaPhi lambda_phi(const InvariantBundle& b, const TruncatedNormalFan& nf, const Fan& refinement) {
  return lambda_phi_impl(b, nf, refinement, LaurentPoly::mono({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}}),
                         false);
}

LambdaPhi lambda_phi_mixed(const InvariantBundle& b, const TruncatedNormalFan& nf,
                           const Fan& refinement) {
  return lambda_phi_impl(b, nf, refinement, LaurentPoly::mono({{Var::U, 1}, {Var::W, 1}}), true);
}

LaurentPoly e_int_lef(const LatticePolytope& p) {
  if (p.is_empty()) throw InputError("E_int,Lef of the empty polytope");
  FaceLattice fl(p);
  LaurentPoly g = fl.poset().g_dual();
  Exponent sh{};
  sh[static_cast<int>(Var::T)] = p.dim();
  LaurentPoly rhs = substitute(g, subs::invert({Var::T})).shifted(sh) - g;
  return divide_by_x_minus_one(rhs, Var::T);
}

// ---------------------------------------------------------------- oracle

namespace {

struct OracleData {
  CoeffTable closed;  // entries with a closed form, before symmetry
};

OracleData closed_forms(const Subdivision& s) {
  OracleData o;
  const int n = s.polytope().dim();
  const FaceLattice& fl = s.faces();
  std::vector<Integer> interior(s.num_cells());
  for (int c = 1; c < s.num_cells(); ++c) interior[c] = s.cell_polytope(c).interior_lattice_point_count();
  for (int r = 1; r <= n - 1; ++r)
    for (int q = 0; q <= n - 1; ++q) {
      Integer sum = 0;
      for (int c = 1; c < s.num_cells(); ++c) {
        const int dF = s.cell(c).dim, dS = fl.dim(s.cell(c).carrier);
        if (dS != r + 1) continue;
        if (q > 0 ? dF == q + 1 : dF <= 1) sum += interior[c];
      }
      o.closed[{0, q, r}] = sum;
    }
  if (n >= 1) {
    Integer sum = 0;
    for (int f = 1; f < fl.size(); ++f)
      if (fl.dim(f) <= 1)
        sum += s.polytope().sub_polytope(fl.vertices_of(f)).interior_lattice_point_count();
    o.closed[{0, 0, 0}] = sum - (n + 1);
  }
  return o;
}

// Close a table under p <-> q and (p,q,r) -> (r-p, r-q, r).
void symmetrize(CoeffTable& t) {
  bool changed = true;
  while (changed) {
    changed = false;
    CoeffTable add;
    for (const auto& [k, v] : t) {
      const auto [p, q, r] = k;
      for (std::array<int, 3> img : {std::array<int, 3>{q, p, r}, std::array<int, 3>{r - p, r - q, r}}) {
        if (img[0] < 0 || img[1] < 0) {
          if (v != 0) throw ComputationError("closed-form coefficient violates the symmetry");
          continue;
        }
        if (!t.count(img) && !add.count(img)) add[img] = v;
      }
    }
    if (!add.empty()) {
      changed = true;
      t.insert(add.begin(), add.end());
    }
  }
}

}  // namespace

CoeffTable small_coeff_oracle(const Subdivision& s) {
  const int n = s.polytope().dim();
  CoeffTable t = closed_forms(s).closed;
  symmetrize(t);
  if (n <= 3) {
    std::array<int, 3> missing{-1, -1, -1};
    int missing_count = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int r = 0; r < n; ++r) {
          if (t.count({p, q, r})) continue;
          if (p > r || q > r) {
            t[{p, q, r}] = 0;
            continue;
          }
          if (r == 0 || (n <= 3 && !(p == 1 && q == 1 && r == 2))) {
            t[{p, q, r}] = 0;
            continue;
          }
          missing = {p, q, r};
          ++missing_count;
        }
    if (missing_count == 1) {
      Integer rest = 0;
      for (const auto& [k, v] : t) rest += v;
      t[missing] = s.polytope().normalized_volume() - 1 - rest;
    } else if (missing_count > 1) {
      throw ComputationError("coefficient oracle left more than one unknown");
    }
  }
  return t;
}

Integer small_coeff(const Subdivision& s, int p, int q, int r) {
  CoeffTable t = small_coeff_oracle(s);
  auto it = t.find({p, q, r});
  if (it == t.end()) throw InputError("coefficient has no closed form");
  return it->second;
}

CoeffTable coefficient_table(const LaurentPoly& h) {
  if (h.coeff(Exponent{}) != 1) throw ComputationError("refined h* must have constant term 1");
  CoeffTable t;
  for (const auto& [e, c] : h.terms()) {
    bool constant = e == Exponent{};
    if (constant) continue;
    const int p = e[0] - 1, q = e[1] - 1, r = e[2] - 2;
    if (p < 0 || q < 0 || r < 0 || e[3] || e[4])
      throw ComputationError("refined h* is not of the form 1 + uvw^2 (...)");
    t[{p, q, r}] = c;
  }
  return t;
}

}  // namespace limhodge
