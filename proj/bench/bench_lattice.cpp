// Serial against OpenMP lattice point counting on dilated polytopes.

#include <benchmark/benchmark.h>

#include <algorithm>

#include "limhodge/kernels.hpp"
#include "limhodge/polytope.hpp"

using namespace limhodge;

namespace {

HalfspaceSystem dilate(const LatticePolytope& p, i64 m) {
  HalfspaceSystem s;
  s.dim = p.dim();
  for (const auto& f : p.facets()) {
    s.a.push_back(f.normal);
    s.b.push_back(f.rhs * m);
  }
  s.lo.assign(s.dim, 0);
  s.hi.assign(s.dim, 0);
  for (int i = 0; i < s.dim; ++i) {
    s.lo[i] = s.hi[i] = p.local_vertices()[0][i] * m;
    for (const auto& v : p.local_vertices()) {
      s.lo[i] = std::min(s.lo[i], v[i] * m);
      s.hi[i] = std::max(s.hi[i], v[i] * m);
    }
  }
  return s;
}

const LatticePolytope& cross4() {
  static const LatticePolytope p = LatticePolytope::hull({{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
                                                          {0, 0, 1, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}});
  return p;
}

const LatticePolytope& simplex3() {
  static const LatticePolytope p = LatticePolytope::hull({{0, 0, 0}, {3, 0, 0}, {0, 5, 0}, {0, 0, 7}});
  return p;
}

void BM_cross4_serial(benchmark::State& st) {
  const HalfspaceSystem s = dilate(cross4(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_lattice_points_serial(s));
}
void BM_cross4_parallel(benchmark::State& st) {
  const HalfspaceSystem s = dilate(cross4(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_lattice_points_parallel(s));
}
void BM_simplex3_serial(benchmark::State& st) {
  const HalfspaceSystem s = dilate(simplex3(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_lattice_points_serial(s));
}
void BM_simplex3_parallel(benchmark::State& st) {
  const HalfspaceSystem s = dilate(simplex3(), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(count_lattice_points_parallel(s));
}

}  // namespace

BENCHMARK(BM_cross4_serial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cross4_parallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simplex3_serial)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simplex3_parallel)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
