#pragma once

#include <array>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "json.hpp"

namespace limhodge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Formal variables, in their canonical (serialization) order.
enum class Var : int { U = 0, V = 1, W = 2, T = 3, L = 4 };
inline constexpr int kNumVars = 5;

using Exponent = std::array<int, kNumVars>;

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

const char* var_name(Var x);

/// Exact multivariate Laurent polynomial with integer coefficients in the
/// variables u, v, w, t, L. Zero coefficients are never stored, so two
/// polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Integer& c);

  static LaurentPoly monomial(const Exponent& e, const Integer& c = 1);
  static LaurentPoly var(Var x, int power = 1);
  /// Product of the given variable powers, e.g. mono({{Var::U, 1}, {Var::W, 2}}).
  static LaurentPoly mono(std::initializer_list<std::pair<Var, int>> powers,
                          const Integer& c = 1);

  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Integer coeff(const Exponent& e) const;
  /// Maximum exponent of x; kNegInfDegree for the zero polynomial.
  int degree_in(Var x) const;
  /// Minimum exponent of x; kNegInfDegree for the zero polynomial.
  int min_degree_in(Var x) const;
  /// Sum of the terms whose x-exponent is k, with that exponent set to zero.
  LaurentPoly coeff_in(Var x, int k) const;
  /// Terms whose exponent satisfies pred.
  template <class Pred>
  LaurentPoly filter(Pred pred) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_)
      if (pred(e)) r.terms_.emplace(e, c);
    return r;
  }

  /// No negative exponents.
  bool is_polynomial() const;
  /// Multiply by the monomial x^e (always exact in the Laurent ring).
  LaurentPoly shifted(const Exponent& e) const;
  LaurentPoly pow(unsigned n) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const Exponent& e, const Integer& c);

  /// Human readable form, monomials in lexicographic exponent order,
  /// e.g. "-11 - 3*w - 3*u*v*w + u*v*w^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Image of a variable under a monomial substitution: coeff * x^exps.
struct MonomialImage {
  Integer coeff = 1;
  Exponent exps{};
};

MonomialImage image_of(std::initializer_list<std::pair<Var, int>> powers,
                       const Integer& c = 1);
MonomialImage constant_image(const Integer& c);

using Substitution = std::map<Var, MonomialImage>;

/// Apply a monomial substitution. Variables not in the map are kept.
/// Throws std::domain_error when a negative power would have to be taken of a
/// coefficient other than +-1 (that would need polynomial division).
LaurentPoly substitute(const LaurentPoly& p, const Substitution& sub);

/// Commonly used substitutions.
namespace subs {
Substitution set_one(std::initializer_list<Var> vars);
/// u -> u^-1, v -> v^-1, w -> uvw.
Substitution refined_involution();
/// u -> u w^-1, v -> 1.
Substitution to_hodge_deligne();
/// t -> given monomial.
Substitution t_to(std::initializer_list<std::pair<Var, int>> powers);
/// Invert every listed variable.
Substitution invert(std::initializer_list<Var> vars);
/// Rename a variable (x -> y).
Substitution rename(Var from, Var to);
}  // namespace subs

/// Exact quotient p / (x - 1), viewing p as univariate in x. Throws
/// ComputationError if the remainder is nonzero.
LaurentPoly divide_by_x_minus_one(const LaurentPoly& p, Var x);

/// Exact quotient by a monomial; throws ComputationError if the quotient has a
/// negative exponent (i.e. the division is not exact in the polynomial ring).
LaurentPoly divide_by_monomial_exact(const LaurentPoly& p, const Exponent& e);

/// Evaluate every variable at an integer.
Integer evaluate(const LaurentPoly& p, const std::array<long, kNumVars>& at);

/// [{"exponents": [e_u, e_v, e_w, e_t, e_L], "coeff": "<integer>"}, ...],
/// sorted lexicographically by exponent tuple.
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace limhodge
