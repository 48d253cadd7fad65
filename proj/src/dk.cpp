#include "limhodge/dk.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "limhodge/ehrhart.hpp"
#include "limhodge/errors.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/poset.hpp"

namespace limhodge {

namespace {

constexpr int kU = static_cast<int>(Var::U);
constexpr int kV = static_cast<int>(Var::V);
constexpr int kW = static_cast<int>(Var::W);

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

Exponent exps(int u, int v, int w) {
  Exponent e{};
  e[kU] = u;
  e[kV] = v;
  e[kW] = w;
  return e;
}

// The two gradings: total degree in u, w for the mixed case, and the power
// of w for the refined case.
struct Grading {
  std::function<int(const Exponent&)> degree;
  LaurentPoly x;   // uw or uvw^2
  Exponent x_exp;  // its exponent
  Substitution inverse;

  LaurentPoly piece(const LaurentPoly& p, int k) const {
    return p.filter([&](const Exponent& e) { return degree(e) == k; });
  }
  LaurentPoly above(const LaurentPoly& p, int k) const {
    return p.filter([&](const Exponent& e) { return degree(e) > k; });
  }
  LaurentPoly below(const LaurentPoly& p, int k) const {
    return p.filter([&](const Exponent& e) { return degree(e) < k; });
  }
  // x^{n-1} p(1/.), the Poincare dual of p.
  LaurentPoly dual(const LaurentPoly& p, int n) const {
    Exponent sh{};
    for (int i = 0; i < kNumVars; ++i) sh[i] = x_exp[i] * (n - 1);
    return substitute(p, inverse).shifted(sh);
  }
};

const Grading& mixed_grading() {
  static const Grading g{[](const Exponent& e) { return e[kU] + e[kW]; },
                         LaurentPoly::mono({{Var::U, 1}, {Var::W, 1}}), exps(1, 0, 1),
                         subs::invert({Var::U, Var::W})};
  return g;
}

const Grading& refined_grading() {
  static const Grading g{[](const Exponent& e) { return e[kW]; },
                         LaurentPoly::mono({{Var::U, 1}, {Var::V, 1}, {Var::W, 2}}), exps(1, 1, 2),
                         subs::invert({Var::U, Var::V, Var::W})};
  return g;
}

// For each face of P, the sum over refined cones gamma' with sigma(gamma') =
// gamma_Q of (x - 1)^{dim gamma_Q - dim gamma'}; empty for P of dimension 0.
std::vector<LaurentPoly> face_weights(const LatticePolytope& p, const FaceLattice& faces,
                                      const LaurentPoly& x) {
  std::vector<LaurentPoly> w(faces.size());
  TruncatedNormalFan nf = normal_fan_truncated(p);
  Fan r = simplicial_refinement(nf.fan);
  const LaurentPoly x1 = x - 1;
  for (int c = 0; c < r.size(); ++c) {
    const int s = r.sigma(c);
    w[nf.cone_face[s]] += x1.pow(static_cast<unsigned>(nf.fan.cones()[s].dim - r.cones()[c].dim));
  }
  return w;
}

// Runs the common part of both algorithms. `strata[q]` is E of the open
// stratum of the proper face q (zero for vertices), `middle` the value of E
// with the grading collapsed (chi_y or the nearby fiber), `collapse` the
// substitution doing that collapse, `spread` rebuilding the middle piece.
DkResult assemble(int n, const Grading& g, const std::vector<LaurentPoly>& weights,
                  const std::vector<LaurentPoly>& strata, int top, const LaurentPoly& middle,
                  const Substitution& collapse,
                  const std::function<std::optional<LaurentPoly>(const LaurentPoly&)>& spread) {
  DkResult out;
  const int mid = n - 1;
  // Weak Lefschetz: E agrees with ((x - 1)^n) / x above the middle degree.
  LaurentPoly torus = (g.x - 1).pow(static_cast<unsigned>(n));
  Exponent inv{};
  for (int i = 0; i < kNumVars; ++i) inv[i] = -g.x_exp[i];
  LaurentPoly e = g.above(torus.shifted(inv), mid);

  LaurentPoly boundary;
  for (std::size_t q = 0; q < strata.size(); ++q)
    if (static_cast<int>(q) != top && !weights[q].is_zero()) boundary += strata[q] * weights[q];

  // Poincare duality on the compactification gives the low degrees.
  LaurentPoly known_high = g.above(e + boundary, mid);
  LaurentPoly low = g.below(g.dual(known_high, n), mid);
  e += low - g.below(boundary, mid);

  // The middle degree from the collapsed value.
  LaurentPoly rest = middle - substitute(e, collapse);
  std::optional<LaurentPoly> m = spread(rest);
  if (!m) {
    out.inconsistent_degree = mid;
    out.e = e;
    return out;
  }
  e += *m;
  out.e = e;

  LaurentPoly compact = e + boundary;
  LaurentPoly mirrored = g.dual(compact, n);
  int lo = mid, hi = mid;
  for (const auto* p : {&compact, &mirrored})
    for (const auto& [x, c] : p->terms()) {
      lo = std::min(lo, g.degree(x));
      hi = std::max(hi, g.degree(x));
    }
  for (int k = lo; k <= hi; ++k)
    if (!(g.piece(compact, k) == g.piece(mirrored, k))) {
      out.inconsistent_degree = k;
      break;
    }
  return out;
}

struct HdCache {
  std::mutex mu;
  std::map<std::vector<IVec>, DkResult> values;
};

HdCache& hd_cache() {
  static HdCache c;
  return c;
}

template <class F>
void parallel_faces(int count, F body) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
  for (int q = 0; q < count; ++q) {
    try {
      body(q);
    } catch (...) {
#pragma omp critical
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

DkResult hd_normalized(const LatticePolytope& p) {
  const int d = p.dim();
  if (d <= 0) return {};
  {
    std::lock_guard<std::mutex> lock(hd_cache().mu);
    auto it = hd_cache().values.find(p.local_vertices());
    if (it != hd_cache().values.end()) return it->second;
  }
  const Grading& g = mixed_grading();
  FaceLattice faces(p);
  std::vector<LaurentPoly> weights = face_weights(p, faces, g.x);
  std::vector<LaurentPoly> strata(faces.size());
  std::vector<std::optional<int>> bad(faces.size());
  parallel_faces(faces.size(), [&](int q) {
    if (q == faces.top() || faces.dim(q) <= 0 || weights[q].is_zero()) return;
    DkResult r = hd_normalized(p.sub_polytope(faces.vertices_of(q)).normalized());
    strata[q] = r.e;
    bad[q] = r.inconsistent_degree;
  });

  // chi_y: u E(u, 1) = (u - 1)^d + (-1)^{d+1} h*(P; u).
  const LaurentPoly u = LaurentPoly::var(Var::U);
  LaurentPoly chi = divide_by_monomial_exact(
      (u - 1).pow(static_cast<unsigned>(d)) + LaurentPoly(static_cast<long>(sign(d + 1))) * h_star(p),
      exps(1, 0, 0));

  auto spread = [d](const LaurentPoly& rest) -> std::optional<LaurentPoly> {
    LaurentPoly m;
    for (const auto& [e, c] : rest.terms()) {
      const int a = e[kU];
      if (a < 0 || a > d - 1 || e != exps(a, 0, 0)) return std::nullopt;
      m.add_term(exps(a, 0, d - 1 - a), c);
    }
    return m;
  };
  DkResult out = assemble(d, g, weights, strata, faces.top(), chi, subs::set_one({Var::W}), spread);
  for (const auto& b : bad)
    if (b && !out.inconsistent_degree) out.inconsistent_degree = b;
  std::lock_guard<std::mutex> lock(hd_cache().mu);
  hd_cache().values.try_emplace(p.local_vertices(), out);
  return out;
}

}  // namespace

DkResult dk_hodge_deligne(const LatticePolytope& p) {
  if (p.is_empty()) throw InputError("Hodge-Deligne polynomial of the empty polytope");
  return hd_normalized(p.normalized());
}

DkResult dk_reconstruct(const Subdivision& input) {
  const Subdivision s = input.normalized();
  const LatticePolytope& p = s.polytope();
  const int n = p.dim();
  if (n <= 0) return {};
  const Grading& g = refined_grading();
  const FaceLattice& faces = s.faces();
  std::vector<LaurentPoly> weights = face_weights(p, faces, g.x);
  std::vector<LaurentPoly> strata(faces.size());
  std::vector<std::optional<int>> bad(faces.size());
  parallel_faces(faces.size(), [&](int q) {
    if (q == faces.top() || faces.dim(q) <= 0 || weights[q].is_zero()) return;
    DkResult r = dk_reconstruct(s.restrict(q));
    strata[q] = r.e;
    bad[q] = r.inconsistent_degree;
  });

  // Nearby fiber: interior cells F contribute E(V_F; u, v) (1 - uv)^{n - dim F}.
  const LaurentPoly one_minus_uv = LaurentPoly(1L) - LaurentPoly::mono({{Var::U, 1}, {Var::V, 1}});
  std::vector<LaurentPoly> cell_terms(s.num_cells());
  parallel_faces(s.num_cells(), [&](int c) {
    if (!s.is_interior(c) || s.cell(c).dim <= 0) return;
    DkResult hd = dk_hodge_deligne(s.cell_polytope(c));
    cell_terms[c] = substitute(hd.e, subs::rename(Var::W, Var::V)) *
                    one_minus_uv.pow(static_cast<unsigned>(n - s.cell(c).dim));
  });
  LaurentPoly nearby;
  for (const auto& t : cell_terms) nearby += t;

  auto spread = [n](const LaurentPoly& rest) -> std::optional<LaurentPoly> {
    return rest.shifted(exps(0, 0, n - 1));
  };
  DkResult out = assemble(n, g, weights, strata, faces.top(), nearby, subs::set_one({Var::W}), spread);
  for (const auto& b : bad)
    if (b && !out.inconsistent_degree) out.inconsistent_degree = b;
  return out;
}

}  // namespace limhodge
