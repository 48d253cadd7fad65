#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "limhodge/dk.hpp"
#include "limhodge/hodge.hpp"
#include "limhodge/random_instances.hpp"

using namespace limhodge;
using namespace fx;

TEST_CASE("worked example and segments") {
  DkResult r = dk_reconstruct(worked());
  CHECK_FALSE(r.inconsistent_degree.has_value());
  CHECK(r.e == -11 - 3 * (1 + u() * v()) * w() + u() * v() * w() * w());
  for (i64 len = 1; len <= 4; ++len) CHECK(dk_reconstruct(Subdivision::trivial(segment(len))).e == len);
  CHECK(dk_hodge_deligne(simplex(2, 4)).e == -11 - 3 * w() - 3 * u() + u() * w());
}

TEST_CASE("agrees with the closed formula") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 16; ++i) {
    Subdivision s = random_subdivision(rng, 1 + i % 3);
    DkResult r = dk_reconstruct(s);
    CHECK_FALSE(r.inconsistent_degree.has_value());
    CHECK(r.e == refined_E(InvariantBundle(s.normalized())));
    DkResult h = dk_hodge_deligne(s.polytope());
    CHECK(h.e == hodge_deligne(s.polytope().normalized()));
  }
  CHECK(dk_hodge_deligne(box(3, 0, 1)).e == hodge_deligne(box(3, 0, 1)));
  CHECK(dk_hodge_deligne(octahedron()).e == hodge_deligne(octahedron()));
}
