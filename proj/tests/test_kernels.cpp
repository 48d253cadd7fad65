#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "limhodge/kernels.hpp"

using namespace limhodge;

namespace {

HalfspaceSystem random_system(std::mt19937_64& rng, int dim, int rows) {
  std::uniform_int_distribution<i64> coef(-4, 4), rhs(-12, 2);
  HalfspaceSystem s;
  s.dim = dim;
  s.lo.assign(dim, -6);
  s.hi.assign(dim, 6);
  for (int r = 0; r < rows; ++r) {
    IVec a(dim);
    for (auto& c : a) c = coef(rng);
    s.a.push_back(a);
    s.b.push_back(rhs(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("parallel count equals the serial reference") {
  std::mt19937_64 rng(5);
  for (int dim = 1; dim <= 4; ++dim)
    for (int i = 0; i < 25; ++i) {
      HalfspaceSystem s = random_system(rng, dim, 2 + i % 5);
      const i64 serial = count_lattice_points_serial(s);
      CHECK(count_lattice_points_parallel(s) == serial);
      CHECK(static_cast<i64>(enumerate_lattice_points(s).size()) == serial);
    }
}

TEST_CASE("simple regions") {
  HalfspaceSystem box;
  box.dim = 3;
  box.lo = {0, 0, 0};
  box.hi = {2, 3, 4};
  CHECK(count_lattice_points_serial(box) == 3 * 4 * 5);
  CHECK(count_lattice_points_parallel(box) == 60);
  // x + y + z <= 4 over the nonnegative orthant: C(7, 3).
  box.hi = {4, 4, 4};
  box.a = {{-1, -1, -1}};
  box.b = {-4};
  CHECK(count_lattice_points_parallel(box) == 35);
  // Empty: x >= 1 and -x >= 0.
  HalfspaceSystem e;
  e.dim = 1;
  e.lo = {-3};
  e.hi = {3};
  e.a = {{1}, {-1}};
  e.b = {1, 0};
  CHECK(count_lattice_points_serial(e) == 0);
  CHECK(count_lattice_points_parallel(e) == 0);
}
