#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "limhodge/errors.hpp"

using namespace limhodge;
using namespace fx;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int terms, int max_exp, bool laurent = false) {
  std::uniform_int_distribution<int> e(laurent ? -max_exp : 0, max_exp), c(-5, 5);
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) p.add_term(ex(e(rng), e(rng), e(rng), 0, 0), c(rng));
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  const LaurentPoly uv = u() * v();
  CHECK((uv - 1) * (uv - 1) == uv * uv - 2 * uv + 1);
  CHECK(((uv - 1) * (uv - 1)).to_string() == "1 - 2*u*v + u^2*v^2");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly p = random_poly(rng, 6, 3, true);
    CHECK(p * 1 == p);
    CHECK(p - p == LaurentPoly());
    CHECK((p + 0) == p);
  }
  CHECK(LaurentPoly(0).is_zero());
  LaurentPoly z;
  z.add_term(ex(1, 0, 0), 2);
  z.add_term(ex(1, 0, 0), -2);
  CHECK(z.is_zero());
  CHECK(z.size() == 0);
}

TEST_CASE("power against a naive term-by-term expansion") {
  const LaurentPoly x = u() * v() * w() * w();
  for (unsigned n = 0; n <= 5; ++n) {
    // Expand prod_{i<n} (x - 1) by choosing a term from each factor.
    std::map<Exponent, Integer> acc;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Exponent e{};
      Integer c = 1;
      for (unsigned i = 0; i < n; ++i) {
        if (mask >> i & 1) {
          e[0] += 1;
          e[1] += 1;
          e[2] += 2;
        } else {
          c = -c;
        }
      }
      acc[e] += c;
    }
    LaurentPoly expected;
    for (const auto& [e, c] : acc) expected.add_term(e, c);
    CHECK((x - 1).pow(n) == expected);
  }
  CHECK((x - 1).pow(3).degree_in(Var::W) == 6);
  CHECK(((x - 1).pow(3)).coeff(ex(2, 2, 4)) == -3);
}

TEST_CASE("products agree with evaluation") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    LaurentPoly p = random_poly(rng, 5, 3), q = random_poly(rng, 5, 3);
    for (const std::array<long, kNumVars>& at :
         {std::array<long, kNumVars>{2, -3, 5, 1, 1}, std::array<long, kNumVars>{-1, 7, 2, 1, 1}}) {
      CHECK(evaluate(p * q, at) == evaluate(p, at) * evaluate(q, at));
      CHECK(evaluate(p + q, at) == evaluate(p, at) + evaluate(q, at));
    }
  }
}

TEST_CASE("coefficient access") {
  const LaurentPoly x = u() * v() * w() * w();
  CHECK(x.coeff(ex(1, 1, 2)) == 1);
  CHECK(x.coeff(ex(1, 1, 1)) == 0);
  const LaurentPoly p = 1 + 9 * x + 3 * x * w() + 3 * x * u() * v() * w();
  CHECK(p.coeff_in(Var::W, 3) == 3 * u() * v() + 3 * u() * u() * v() * v());
  CHECK(p.degree_in(Var::W) == 3);
  CHECK(p.min_degree_in(Var::W) == 0);
  CHECK(LaurentPoly().degree_in(Var::U) == kNegInfDegree);
  CHECK(p.filter([](const Exponent& e) { return e[2] == 2; }) == 9 * x);
}

TEST_CASE("substitutions") {
  const LaurentPoly x = u() * v() * w() * w();
  CHECK(substitute(x, subs::set_one({Var::W})) == u() * v());
  for (unsigned n = 0; n <= 4; ++n) {
    const LaurentPoly lhs = substitute((x - 1).pow(n), subs::refined_involution());
    // (u^-1 v^-1 (uvw)^2 - 1)^n = (uvw^2 - 1)^n: the involution fixes uvw^2.
    CHECK(lhs == (x - 1).pow(n));
    const LaurentPoly inv = substitute((x - 1).pow(n), subs::invert({Var::U, Var::V, Var::W}));
    CHECK(inv.shifted(ex(n, n, 2 * n)) == (1 - x).pow(n));
  }
  // E of the worked example at w = 1.
  const LaurentPoly e = -11 - 3 * (1 + u() * v()) * w() + x;
  CHECK(substitute(e, subs::set_one({Var::W})) == -14 - 2 * u() * v());
  CHECK(substitute(e, subs::to_hodge_deligne()) == -11 - 3 * w() - 3 * u() + u() * w());
  CHECK(substitute(1 + t(), subs::t_to({{Var::U, 1}, {Var::V, 1}})) == 1 + u() * v());
  CHECK(substitute(u() + 2 * v(), subs::rename(Var::U, Var::L)) == L() + 2 * v());
  CHECK(substitute(u() * u(), {{Var::U, constant_image(2)}}) == 4);
  CHECK_THROWS_AS(substitute(LaurentPoly::var(Var::U, -1), {{Var::U, constant_image(2)}}), std::domain_error);
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly q = random_poly(rng, 5, 3);
    CHECK(divide_by_x_minus_one(q * (w() - 1), Var::W) == q);
    CHECK(divide_by_monomial_exact(q.shifted(ex(1, 0, 2)), ex(1, 0, 2)) == q);
  }
  CHECK_THROWS_AS(divide_by_x_minus_one(w() + 1, Var::W), ComputationError);
  CHECK_THROWS_AS(divide_by_monomial_exact(1 + u(), ex(1, 0, 0)), ComputationError);
}

TEST_CASE("json round trip and canonical order") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    LaurentPoly p = random_poly(rng, 8, 4, true);
    const auto j = to_json(p);
    CHECK(poly_from_json(j) == p);
    CHECK(to_json(poly_from_json(j)).dump() == j.dump());
  }
  LaurentPoly big = LaurentPoly(Integer("123456789012345678901234567890")) * u();
  CHECK(to_json(big)[0]["coeff"] == "123456789012345678901234567890");
}
