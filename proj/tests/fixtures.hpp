#pragma once

#include <random>
#include <vector>

#include "limhodge/exactpoly.hpp"
#include "limhodge/polytope.hpp"
#include "limhodge/subdivision.hpp"

namespace fx {

using namespace limhodge;

inline LaurentPoly u() { return LaurentPoly::var(Var::U); }
inline LaurentPoly v() { return LaurentPoly::var(Var::V); }
inline LaurentPoly w() { return LaurentPoly::var(Var::W); }
inline LaurentPoly t() { return LaurentPoly::var(Var::T); }
inline LaurentPoly L() { return LaurentPoly::var(Var::L); }

inline Exponent ex(int eu, int ev, int ew, int et = 0, int el = 0) { return {eu, ev, ew, et, el}; }

// 4 times the standard triangle, with the unit triangle at (1,1) lowered.
inline std::vector<HeightPoint> worked_heights() {
  return {{{0, 0}, 1}, {{4, 0}, 1}, {{0, 4}, 1}, {{1, 1}, 0}, {{2, 1}, 0}, {{1, 2}, 0}};
}
inline Subdivision worked() { return regular_subdivision(worked_heights()); }

inline LatticePolytope simplex(int l, i64 scale = 1) {
  std::vector<IVec> pts{IVec(l, 0)};
  for (int i = 0; i < l; ++i) {
    IVec e(l, 0);
    e[i] = scale;
    pts.push_back(e);
  }
  return LatticePolytope::hull(pts);
}

inline LatticePolytope box(int d, i64 lo, i64 hi) {
  std::vector<IVec> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    IVec x(d);
    for (int i = 0; i < d; ++i) x[i] = (mask >> i) & 1 ? hi : lo;
    pts.push_back(x);
  }
  return LatticePolytope::hull(pts);
}

inline LatticePolytope segment(i64 len) { return LatticePolytope::hull({{0}, {len}}); }

inline LatticePolytope octahedron() {
  return LatticePolytope::hull({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

inline LatticePolytope polygon(int n) {
  // Lattice n-gons for n = 3..8.
  static const std::vector<std::vector<IVec>> table = {
      {{0, 0}, {1, 0}, {0, 1}},
      {{0, 0}, {1, 0}, {1, 1}, {0, 1}},
      {{0, 0}, {2, 0}, {3, 1}, {1, 2}, {0, 1}},
      {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}},
      {{0, 0}, {2, 0}, {4, 1}, {5, 3}, {3, 5}, {1, 4}, {-1, 2}},
      {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}}};
  return LatticePolytope::hull(table[n - 3]);
}

// Brute-force count of lattice points of mP over a bounding box.
inline long brute_count(const LatticePolytope& p, int m) {
  const int d = p.ambient_dim();
  IVec lo(d, 0), hi(d, 0);
  for (int i = 0; i < d; ++i) {
    lo[i] = hi[i] = p.vertices()[0][i];
    for (const auto& x : p.vertices()) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  }
  if (m == 0) return 1;
  long count = 0;
  IVec z(d);
  std::vector<IVec> scaled;
  for (const auto& x : p.vertices()) {
    IVec y(x);
    for (auto& c : y) c *= m;
    scaled.push_back(y);
  }
  const LatticePolytope mp = LatticePolytope::hull(scaled);
  for (int i = 0; i < d; ++i) z[i] = lo[i] * m;
  while (true) {
    if (mp.contains(z)) ++count;
    int i = 0;
    while (i < d && z[i] == hi[i] * m) {
      z[i] = lo[i] * m;
      ++i;
    }
    if (i == d) break;
    ++z[i];
  }
  return count;
}

}  // namespace fx
