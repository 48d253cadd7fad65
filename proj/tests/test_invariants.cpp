#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "limhodge/ehrhart.hpp"
#include "limhodge/errors.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/invariants.hpp"
#include "limhodge/random_instances.hpp"

using namespace limhodge;
using namespace fx;

namespace {

// h* from brute-force point counts: (1-u)^{d+1} sum_m f(m) u^m, truncated.
LaurentPoly h_star_brute(const LatticePolytope& p) {
  const int d = p.dim();
  LaurentPoly series;
  for (int m = 0; m <= d; ++m) series += LaurentPoly::var(Var::U, m) * LaurentPoly(brute_count(p, m));
  LaurentPoly prod = series * (1 - u()).pow(d + 1);
  return prod.filter([d](const Exponent& e) { return e[0] <= d; });
}

LaurentPoly mirror(const LaurentPoly& p, int k, bool mixed) {
  if (mixed) return substitute(p, subs::invert({Var::U, Var::W})).shifted(ex(k, 0, k));
  return substitute(p, subs::invert({Var::U, Var::V, Var::W})).shifted(ex(k, k, 2 * k));
}

}  // namespace

TEST_CASE("Ehrhart values and h*") {
  for (int l = 0; l <= 4; ++l) CHECK(h_star(simplex(l)) == 1);
  CHECK(h_star(box(2, 0, 1)) == 1 + u());
  CHECK(h_star(simplex(2, 2)) == 1 + 3 * u());
  CHECK(h_star(simplex(2, 4)) == 1 + 12 * u() + 3 * u() * u());
  CHECK(h_star(LatticePolytope::empty(0)) == 1);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    LatticePolytope p = random_polytope(rng, 1 + i % 3);
    CHECK(h_star(p) == h_star_brute(p));
    auto vals = ehrhart_values(p, 4);
    for (int m = 0; m < 4; ++m) CHECK(vals[m] == brute_count(p, m));
    CHECK(evaluate(h_star(p), {1, 1, 1, 1, 1}) == p.normalized_volume());
  }
}

TEST_CASE("local h*") {
  CHECK(local_h_star(LatticePolytope::hull({{3, 4}})) == 0);
  for (int l = 1; l <= 4; ++l) CHECK(local_h_star(simplex(l)) == 0);
  CHECK(local_h_star(segment(2)) == u());
  CHECK(local_h_star(simplex(2, 4)) == 3 * u() + 3 * u() * u());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 15; ++i) {
    LatticePolytope p = random_polytope(rng, 1 + i % 3);
    const int d = p.dim();
    const LaurentPoly l = local_h_star(p);
    CHECK(substitute(l, subs::invert({Var::U})).shifted(ex(d + 1, 0, 0)) == l);
    CHECK(l.coeff(ex(d, 0, 0)) == p.interior_lattice_point_count());
  }
}

TEST_CASE("mixed and limit mixed h*") {
  Subdivision s = worked();
  InvariantBundle b(s);
  const LaurentPoly uv = u() * v();
  CHECK(b.limit_mixed() == 1 + 12 * uv + 3 * uv * uv);
  CHECK(b.limit_mixed_via_cells(b.top()) == b.limit_mixed());
  CHECK(b.local_limit_mixed() == 3 * uv + 3 * uv * uv);
  CHECK(mixed_h_star(simplex(2, 4)) == 1 + 9 * uv + 3 * u() * v() * v() + 3 * u() * u() * v());
  CHECK(InvariantBundle(Subdivision::trivial(simplex(3))).local_limit_mixed() == 0);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 12; ++i) {
    Subdivision r = random_subdivision(rng, 1 + i % 3).normalized();
    InvariantBundle rb(r);
    const LaurentPoly h = rb.limit_mixed();
    CHECK(h == substitute(h, {{Var::U, image_of({{Var::V, 1}})}, {Var::V, image_of({{Var::U, 1}})}}));
    CHECK(h == rb.limit_mixed_via_cells(rb.top()));
    CHECK(substitute(h, subs::set_one({Var::V})) == h_star(r.polytope()));
    const LatticePolytope& p = r.polytope();
    const LaurentPoly m = mixed_h_star(p);
    CHECK(substitute(m, subs::set_one({Var::V})) == h_star(p));
  }
}

TEST_CASE("refined h*") {
  Subdivision s = worked();
  InvariantBundle b(s);
  const LaurentPoly x = u() * v() * w() * w();
  const LaurentPoly h = b.refined();
  CHECK(h == 1 + 9 * x + 3 * x * w() + 3 * x * u() * v() * w());
  CHECK(h.coeff(ex(1, 1, 3)) == 3);
  // Theorem form: h* = (-1)^{d+1} [uvw^2 E - (uvw^2 - 1)^d] with the displayed E.
  const LaurentPoly e = -11 - 3 * (1 + u() * v()) * w() + x;
  CHECK(h == -(x * e - (x - 1).pow(2)));
  for (i64 len = 1; len <= 5; ++len)
    CHECK(InvariantBundle(Subdivision::trivial(segment(len))).refined() == 1 + (len - 1) * x);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 12; ++i) {
    Subdivision r = random_subdivision(rng, 1 + i % 3).normalized();
    InvariantBundle rb(r);
    CHECK(substitute(rb.refined(), subs::set_one({Var::V, Var::W})) == h_star(r.polytope()));
    CHECK(substitute(rb.refined(), subs::set_one({Var::W})) == rb.limit_mixed());
    CHECK(substitute(rb.refined(), subs::refined_involution()) == rb.refined());
  }
}

TEST_CASE("small coefficients") {
  Subdivision s = worked();
  CHECK(small_coeff(s, 0, 0, 1) == 3);
  CHECK(small_coeff(s, 0, 1, 1) == 0);
  CHECK(small_coeff(s, 0, 0, 0) == 9);
  CoeffTable t = coefficient_table(InvariantBundle(s).refined());
  CHECK(t[{0, 0, 0}] == 9);
  CHECK(t[{0, 0, 1}] == 3);
  CHECK(t[{1, 1, 1}] == 3);
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10; ++i) {
    Subdivision r = random_subdivision(rng, 2 + i % 2).normalized();
    CoeffTable oracle = small_coeff_oracle(r);
    CoeffTable got = coefficient_table(InvariantBundle(r).refined());
    for (const auto& [k, c] : oracle) CHECK((got.count(k) ? got[k] : Integer(0)) == c);
  }
  Subdivision sq = Subdivision::trivial(box(2, 0, 1));
  CoeffTable so = small_coeff_oracle(sq);
  CoeffTable sg = coefficient_table(InvariantBundle(sq).refined());
  for (const auto& [k, c] : so) CHECK((sg.count(k) ? sg[k] : Integer(0)) == c);
}

TEST_CASE("E_int,Lef") {
  CHECK(e_int_lef(segment(3)) == 1);
  for (int n = 3; n <= 8; ++n) CHECK(e_int_lef(polygon(n)) == 1 + t());
  CHECK(e_int_lef(box(3, 0, 1)) == 1 + 3 * t() + t() * t());
  CHECK(e_int_lef(octahedron()) == 1 + 5 * t() + t() * t());
  CHECK(e_int_lef(simplex(3)) == 1 + t() + t() * t());
}

TEST_CASE("Lambda and Phi") {
  Subdivision s = worked();
  InvariantBundle b(s);
  TruncatedNormalFan nf = normal_fan_truncated(s.polytope());
  Fan r = simplicial_refinement(nf.fan);
  for (LaurentPoly x : {u() * v() * w() * w(), u() * w()}) {
    auto weights = sigma_weights(nf.fan, r, x);
    for (const auto& wt : weights) CHECK(wt == 1);
  }
  LambdaPhi lp = lambda_phi(b, nf, r);
  CHECK(lp.lambda == mirror(lp.lambda, 3, false));
  LambdaPhi lm = lambda_phi_mixed(b, nf, r);
  CHECK(lm.lambda == mirror(lm.lambda, 3, true));
  std::mt19937_64 rng(15);
  for (int i = 0; i < 8; ++i) {
    Subdivision rs = random_subdivision(rng, 2 + i % 2).normalized();
    InvariantBundle rb(rs);
    TruncatedNormalFan rnf = normal_fan_truncated(rs.polytope());
    Fan rr = simplicial_refinement(rnf.fan);
    const int k = rs.polytope().dim() + 1;
    CHECK(lambda_phi(rb, rnf, rr).lambda == mirror(lambda_phi(rb, rnf, rr).lambda, k, false));
    CHECK(lambda_phi_mixed(rb, rnf, rr).lambda == mirror(lambda_phi_mixed(rb, rnf, rr).lambda, k, true));
  }
}
