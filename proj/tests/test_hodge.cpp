#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "limhodge/ehrhart.hpp"
#include "limhodge/errors.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/hodge.hpp"
#include "limhodge/random_instances.hpp"

using namespace limhodge;
using namespace fx;

namespace {

const LaurentPoly& x2() {
  static const LaurentPoly x = u() * v() * w() * w();
  return x;
}

}  // namespace

TEST_CASE("worked example") {
  Subdivision s = worked();
  InvariantBundle b(s);
  const LaurentPoly uv = u() * v();
  CHECK(refined_E(b) == -11 - 3 * (1 + uv) * w() + x2());
  CHECK(nearby_fiber_E(b) == -14 - 2 * uv);
  CHECK(to_L_form(nearby_fiber_E(b)) == std::optional<LaurentPoly>(-14 - 2 * L()));
  CHECK(from_L_form(-14 - 2 * L()) == -14 - 2 * uv);
  CHECK(intersection_E(b) == 1 - 3 * (1 + uv) * w() + x2());
  CHECK(sum_over_strata_E_int(b) == intersection_E(b));
  CHECK(euler_characteristic(s.polytope()) == -16);
  CHECK(chi_y(s.polytope()) == -14 - 2 * u());
  CHECK(chi_y_cell_sum(s) == chi_y(s.polytope()));
  HodgeNumberTable t = refined_hodge_numbers(b);
  CHECK(t.refined == CoeffTable{{{0, 0, 0}, 9}, {{0, 0, 1}, 3}, {{1, 1, 1}, 3}});
}

TEST_CASE("tropical cells") {
  Subdivision s = worked();
  std::vector<TropicalCell> cells = tropical_cells(s);
  int bounded_vertices = 0, bounded_edges = 0;
  for (const auto& c : cells) {
    if (!c.bounded) continue;
    if (c.dim == 0) ++bounded_vertices;
    if (c.dim == 1) {
      ++bounded_edges;
      CHECK(to_L_form(c.cls) == std::optional<LaurentPoly>(L() - 1));
    }
  }
  CHECK(bounded_vertices == 4);
  CHECK(bounded_edges == 6);
  CHECK(nearby_fiber_from_cells(cells) == -14 - 2 * u() * v());
  // Three vertices of class L - 6, one of class L - 2, six edges of class L - 1.
  std::vector<TropicalCell> manual;
  for (int i = 0; i < 3; ++i) manual.push_back({0, true, L() - 6});
  manual.push_back({0, true, L() - 2});
  for (int i = 0; i < 6; ++i) manual.push_back({1, true, L() - 1});
  CHECK(nearby_fiber_from_cells(manual) == -14 - 2 * L());
  CHECK(nearby_fiber_from_cells({{0, true, 7 + L()}}) == 7 + L());
  CHECK(nearby_fiber_from_cells({{1, false, L()}, {2, false, 3}}) == 0);
}

TEST_CASE("chi_y and Euler characteristics") {
  for (int l = 0; l <= 5; ++l) {
    CHECK(u() * chi_y(simplex(l)) == (u() - 1).pow(l) + (l % 2 ? 1 : -1));
    CHECK(euler_characteristic(simplex(l)) == (l % 2 ? 1 : -1) * (l == 0 ? 0 : 1));
    CHECK(substitute(hodge_deligne(simplex(l)), subs::set_one({Var::W})) == chi_y(simplex(l)));
  }
  for (i64 len = 1; len <= 5; ++len) {
    CHECK(euler_characteristic(segment(len)) == len);
    CHECK(hodge_deligne(segment(len)) == len);
    CHECK(refined_E(InvariantBundle(Subdivision::trivial(segment(len)))) == len);
  }
  std::mt19937_64 rng(16);
  for (int i = 0; i < 15; ++i) {
    Subdivision s = random_subdivision(rng, 1 + i % 3).normalized();
    const int d = s.polytope().dim();
    Integer expect = s.polytope().normalized_volume();
    if (d % 2 == 0) expect = -expect;
    CHECK(euler_characteristic(s.polytope()) == expect);
    CHECK(chi_y_cell_sum(s) == chi_y(s.polytope()));
    CHECK_FALSE(weak_lefschetz_violation_uw(hodge_deligne(s.polytope()), d, d).has_value());
  }
}

TEST_CASE("refined E against the curve closed form") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 10; ++i) {
    Subdivision s = random_subdivision(rng, 2).normalized();
    InvariantBundle b(s);
    const Integer boundary = s.polytope().lattice_point_count() - s.polytope().interior_lattice_point_count();
    const Integer h001 = small_coeff(s, 0, 0, 1), h011 = small_coeff(s, 0, 1, 1);
    const LaurentPoly uv = u() * v();
    const LaurentPoly tail = -LaurentPoly(h001) * (1 + uv) * w() - LaurentPoly(h011) * (u() + v()) * w() + x2();
    CHECK(refined_E(b) == LaurentPoly(1 - boundary) + tail);
    CHECK(intersection_E(b) == 1 + tail);
    CHECK(nearby_fiber_E(b) == substitute(refined_E(b), subs::set_one({Var::W})));
    CHECK(hodge_deligne(s.polytope()) == substitute(refined_E(b), subs::to_hodge_deligne()));
    CHECK_FALSE(weak_lefschetz_violation(refined_E(b), 2, 2).has_value());
  }
}

TEST_CASE("Hodge numbers") {
  for (i64 len = 2; len <= 5; ++len) {
    HodgeNumberTable t = refined_hodge_numbers(InvariantBundle(Subdivision::trivial(segment(len))));
    CHECK(t.refined[{0, 0, 0}] == len - 1);
  }
  std::mt19937_64 rng(18);
  for (int i = 0; i < 10; ++i) {
    HodgeNumberTable t = refined_hodge_numbers(InvariantBundle(random_subdivision(rng, 2 + i % 2).normalized()));
    for (const auto& [k, c] : t.refined) {
      const auto [p, q, r] = k;
      CHECK(c > 0);
      CHECK(t.refined[{q, p, r}] == c);
      CHECK(t.refined[{r - p, r - q, r}] == c);
    }
  }
}

TEST_CASE("intersection cohomology by strata") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 10; ++i) {
    InvariantBundle b(random_subdivision(rng, 2 + i % 2).normalized());
    CHECK(sum_over_strata_E_int(b) == intersection_E(b));
  }
  InvariantBundle seg(Subdivision::trivial(segment(1)));
  CHECK(intersection_E(seg) == sum_over_strata_E_int(seg));
  CHECK(intersection_E(seg) == 1);
}

TEST_CASE("partial compactifications") {
  Subdivision s = worked();
  InvariantBundle b(s);
  TruncatedNormalFan nf = normal_fan_truncated(s.polytope());
  Fan zero = subfan(nf.fan, [](const Cone& c) { return c.dim == 0; });
  CHECK(partial_compactification_E(b, nf, simplicial_refinement(zero)) == refined_E(b));
  Fan full = simplicial_refinement(nf.fan);
  CHECK(partial_compactification_E(b, nf, full) == intersection_E(b));
  CHECK(partial_compactification_psi(b, nf, full) == compact_psi_from_cells(s));
  CHECK(compact_psi_from_cells(s) == -2 - 2 * u() * v());
  std::mt19937_64 rng(20);
  for (int i = 0; i < 8; ++i) {
    Subdivision r = random_subdivision(rng, 2 + i % 2).normalized();
    InvariantBundle rb(r);
    TruncatedNormalFan rnf = normal_fan_truncated(r.polytope());
    CHECK(partial_compactification_psi(rb, rnf, simplicial_refinement(rnf.fan)) == compact_psi_from_cells(r));
  }
}

TEST_CASE("stringy E") {
  const LatticePolytope sq = box(2, -1, 1);
  InvariantBundle b(Subdivision::trivial(sq));
  const LaurentPoly e = stringy_E(b);
  CHECK(e == 1 - v() * w() - u() * w() + x2());
  CHECK(substitute(e, subs::to_hodge_deligne()) == stringy_E_generic(b));
  CHECK(stringy_E_generic(b) == (1 - u()) * (1 - w()));
  const LatticePolytope tri = LatticePolytope::hull({{1, 0}, {0, 1}, {-1, -1}});
  DualPolytope d = dual_polytope(tri);
  REQUIRE(d.reflexive);
  CHECK(stringy_E_generic(InvariantBundle(Subdivision::trivial(tri))) == (1 - u()) * (1 - w()));
  CHECK(stringy_E_generic(InvariantBundle(Subdivision::trivial(*d.polytope))) == (1 - u()) * (1 - w()));
  // Signed mirror form (-u)^{n-1} E(1/u, w) in dimension 2.
  const LaurentPoly g = stringy_E_generic(b);
  CHECK(-substitute(g, subs::invert({Var::U})).shifted(ex(1, 0, 0)) == g);
  CHECK_THROWS_AS(stringy_E(InvariantBundle(Subdivision::trivial(box(2, 0, 1)))), InputError);
  CHECK_THROWS_AS(stringy_E(InvariantBundle(Subdivision::trivial(simplex(2, 2)))), InputError);
}
