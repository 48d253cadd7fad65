#include "limhodge/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "limhodge/errors.hpp"

namespace limhodge {

namespace {

bool empty_box(const HalfspaceSystem& s) {
  for (int i = 0; i < s.dim; ++i)
    if (s.lo[i] > s.hi[i]) return true;
  return false;
}

bool satisfies(const HalfspaceSystem& s, const IVec& z) {
  for (std::size_t i = 0; i < s.a.size(); ++i)
    if (dot(s.a[i], z) < s.b[i]) return false;
  return true;
}

template <class Visit>
void odometer(const HalfspaceSystem& s, Visit visit) {
  if (empty_box(s)) return;
  IVec z = s.lo;
  while (true) {
    visit(z);
    int i = s.dim - 1;
    while (i >= 0 && z[i] == s.hi[i]) {
      z[i] = s.lo[i];
      --i;
    }
    if (i < 0) return;
    ++z[i];
  }
}

}  // namespace

i64 count_lattice_points_serial(const HalfspaceSystem& sys) {
  i64 count = 0;
  odometer(sys, [&](const IVec& z) {
    if (satisfies(sys, z)) ++count;
  });
  return count;
}

std::vector<IVec> enumerate_lattice_points(const HalfspaceSystem& sys) {
  std::vector<IVec> out;
  odometer(sys, [&](const IVec& z) {
    if (satisfies(sys, z)) out.push_back(z);
  });
  return out;
}

i64 count_lattice_points_parallel(const HalfspaceSystem& sys) {
  if (empty_box(sys)) return 0;
  const int d = sys.dim;
  if (d == 0) return satisfies(sys, {}) ? 1 : 0;

  // Flatten the leading d-1 coordinates into one index.
  const int lead = d - 1;
  IVec extent(lead);
  i64 cells = 1;
  for (int i = 0; i < lead; ++i) {
    extent[i] = cadd(sys.hi[i] - sys.lo[i], 1);
    cells = cmul(cells, extent[i]);
  }
  const std::size_t m = sys.a.size();
  // Bound every intermediate up front: nothing may throw inside the region.
  for (std::size_t r = 0; r < m; ++r) {
    i64 bound = std::abs(sys.b[r]);
    for (int i = 0; i < d; ++i)
      bound = cadd(bound, cmul(std::abs(sys.a[r][i]),
                               std::max(std::abs(sys.lo[i]), std::abs(sys.hi[i]))));
  }

  i64 total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (i64 idx = 0; idx < cells; ++idx) {
    IVec z(d);
    i64 rest = idx;
    for (int i = lead - 1; i >= 0; --i) {
      z[i] = sys.lo[i] + rest % extent[i];
      rest /= extent[i];
    }
    i64 lo = sys.lo[lead], hi = sys.hi[lead];
    for (std::size_t r = 0; r < m && lo <= hi; ++r) {
      // a_last * z_last >= b - <a_lead, z_lead>
      __int128 partial = 0;
      for (int i = 0; i < lead; ++i) partial += static_cast<__int128>(sys.a[r][i]) * z[i];
      const i64 need = checked(static_cast<__int128>(sys.b[r]) - partial);
      const i64 c = sys.a[r][lead];
      if (c > 0)
        lo = std::max(lo, ceil_div(need, c));
      else if (c < 0)
        hi = std::min(hi, floor_div(need, c));
      else if (need > 0)
        hi = lo - 1;
    }
    if (lo <= hi) total += hi - lo + 1;
  }
  return total;
}

}  // namespace limhodge
