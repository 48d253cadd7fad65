#include "limhodge/ehrhart.hpp"

#include <map>
#include <mutex>

#include "limhodge/poset.hpp"

namespace limhodge {

namespace {

struct HStarCache {
  std::mutex mu;
  std::map<std::vector<IVec>, LaurentPoly> values;
};

HStarCache& cache() {
  static HStarCache c;
  return c;
}

Integer binomial(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

std::vector<Integer> ehrhart_values(const LatticePolytope& p, int count) {
  std::vector<Integer> out;
  for (int m = 0; m < count; ++m) out.push_back(p.lattice_point_count(m));
  return out;
}

LaurentPoly h_star(const LatticePolytope& p) {
  if (p.is_empty()) return LaurentPoly(1L);
  // Translation invariant key: vertices in chart coordinates.
  const auto& key = p.local_vertices();
  {
    std::lock_guard<std::mutex> lock(cache().mu);
    auto it = cache().values.find(key);
    if (it != cache().values.end()) return it->second;
  }
  const int d = p.dim();
  std::vector<Integer> f = ehrhart_values(p, d + 1);
  LaurentPoly h;
  for (int k = 0; k <= d; ++k) {
    Integer c = 0;
    for (int j = 0; j <= k; ++j) {
      Integer term = binomial(d + 1, j) * f[k - j];
      if (j % 2) c -= term; else c += term;
    }
    h += LaurentPoly::mono({{Var::U, k}}, c);
  }
  std::lock_guard<std::mutex> lock(cache().mu);
  cache().values.try_emplace(key, h);
  return h;
}

LaurentPoly local_h_star(const LatticePolytope& p, const FaceLattice& faces) {
  if (p.is_empty()) return LaurentPoly(1L);
  EulerianPoset b = faces.poset();
  const Substitution t_to_u = subs::rename(Var::T, Var::U);
  LaurentPoly l;
  for (int q = 0; q < faces.size(); ++q) {
    LaurentPoly term = h_star(p.sub_polytope(faces.vertices_of(q))) *
                       substitute(b.g_dual(q, faces.top()), t_to_u);
    if ((p.dim() - faces.dim(q)) % 2) l -= term; else l += term;
  }
  return l;
}

LaurentPoly local_h_star(const LatticePolytope& p) {
  if (p.is_empty()) return LaurentPoly(1L);
  return local_h_star(p, FaceLattice(p));
}

}  // namespace limhodge
