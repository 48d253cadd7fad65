#include "limhodge/exactpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "limhodge/errors.hpp"

namespace limhodge {

namespace {

Exponent add_exp(const Exponent& a, const Exponent& b) {
  Exponent r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

const char* var_name(Var x) {
  switch (x) {
    case Var::U: return "u";
    case Var::V: return "v";
    case Var::W: return "w";
    case Var::T: return "t";
    case Var::L: return "L";
  }
  return "?";
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{}, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

LaurentPoly LaurentPoly::var(Var x, int power) {
  Exponent e{};
  e[static_cast<int>(x)] = power;
  return monomial(e);
}

LaurentPoly LaurentPoly::mono(std::initializer_list<std::pair<Var, int>> powers,
                              const Integer& c) {
  Exponent e{};
  for (const auto& [x, k] : powers) e[static_cast<int>(x)] += k;
  return monomial(e, c);
}

Integer LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::degree_in(Var x) const {
  int d = kNegInfDegree;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(x)]);
  return d;
}

int LaurentPoly::min_degree_in(Var x) const {
  if (terms_.empty()) return kNegInfDegree;
  int d = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<int>(x)]);
  return d;
}

LaurentPoly LaurentPoly::coeff_in(Var x, int k) const {
  LaurentPoly r;
  const int i = static_cast<int>(x);
  for (const auto& [e, c] : terms_) {
    if (e[i] != k) continue;
    Exponent f = e;
    f[i] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int k : e)
      if (k < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), add_exp(e, s), c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1L), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(add_exp(ea, eb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = true;
    for (int k : e)
      if (k) constant = false;
    if (constant) {
      os << mag.get_str();
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << var_name(static_cast<Var>(i));
      if (e[i] != 1) {
        if (e[i] < 0)
          os << "^(" << e[i] << ")";
        else
          os << "^" << e[i];
      }
      need_star = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

MonomialImage image_of(std::initializer_list<std::pair<Var, int>> powers, const Integer& c) {
  MonomialImage m;
  m.coeff = c;
  for (const auto& [x, k] : powers) m.exps[static_cast<int>(x)] += k;
  return m;
}

MonomialImage constant_image(const Integer& c) {
  MonomialImage m;
  m.coeff = c;
  return m;
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& sub) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    Exponent out{};
    Integer coeff = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto it = sub.find(static_cast<Var>(i));
      if (it == sub.end()) {
        out[i] += e[i];
        continue;
      }
      const MonomialImage& img = it->second;
      if (img.coeff == 0) {
        if (e[i] < 0) throw std::domain_error("substitution divides by zero");
        coeff = 0;
        break;
      }
      if (e[i] < 0 && img.coeff != 1 && img.coeff != -1)
        throw std::domain_error("substitution would require polynomial division");
      Integer f;
      mpz_pow_ui(f.get_mpz_t(), img.coeff.get_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
      coeff *= f;
      for (int j = 0; j < kNumVars; ++j) out[j] += img.exps[j] * e[i];
    }
    r.add_term(out, coeff);
  }
  return r;
}

namespace subs {

Substitution set_one(std::initializer_list<Var> vars) {
  Substitution s;
  for (Var x : vars) s[x] = constant_image(1);
  return s;
}

Substitution refined_involution() {
  return {{Var::U, image_of({{Var::U, -1}})},
          {Var::V, image_of({{Var::V, -1}})},
          {Var::W, image_of({{Var::U, 1}, {Var::V, 1}, {Var::W, 1}})}};
}

Substitution to_hodge_deligne() {
  return {{Var::U, image_of({{Var::U, 1}, {Var::W, -1}})}, {Var::V, constant_image(1)}};
}

Substitution t_to(std::initializer_list<std::pair<Var, int>> powers) {
  return {{Var::T, image_of(powers)}};
}

Substitution invert(std::initializer_list<Var> vars) {
  Substitution s;
  for (Var x : vars) s[x] = image_of({{x, -1}});
  return s;
}

Substitution rename(Var from, Var to) { return {{from, image_of({{to, 1}})}}; }

}  // namespace subs

LaurentPoly divide_by_x_minus_one(const LaurentPoly& p, Var x) {
  // Group by the other variables; each group is a univariate Laurent
  // polynomial c_lo x^lo + ... + c_hi x^hi, divided by synthetic division
  // from the top: q_{k-1} = c_k + q_k.
  const int i = static_cast<int>(x);
  std::map<Exponent, std::map<int, Integer>> groups;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[i] = 0;
    groups[rest][e[i]] = c;
  }
  LaurentPoly q;
  for (const auto& [rest, uni] : groups) {
    const int lo = uni.begin()->first, hi = uni.rbegin()->first;
    Integer carry = 0;
    for (int k = hi; k > lo; --k) {
      auto it = uni.find(k);
      if (it != uni.end()) carry += it->second;
      Exponent e = rest;
      e[i] = k - 1;
      q.add_term(e, carry);
    }
    if (carry + uni.begin()->second != 0)
      throw ComputationError(std::string("inexact division by (") + var_name(x) + " - 1)");
  }
  return q;
}

LaurentPoly divide_by_monomial_exact(const LaurentPoly& p, const Exponent& e) {
  Exponent neg;
  for (int i = 0; i < kNumVars; ++i) neg[i] = -e[i];
  LaurentPoly q = p.shifted(neg);
  if (!q.is_polynomial()) throw ComputationError("inexact division by monomial");
  return q;
}

Integer evaluate(const LaurentPoly& p, const std::array<long, kNumVars>& at) {
  Integer total = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer term = c;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0) {
        if (at[i] != 1 && at[i] != -1) throw std::domain_error("evaluate: negative power");
      }
      Integer base = at[i], f;
      mpz_pow_ui(f.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::abs(e[i])));
      term *= f;
    }
    total += term;
  }
  return total;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back({{"exponents", e}, {"coeff", c.get_str()}});
  return arr;
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a JSON array");
  LaurentPoly p;
  for (const auto& t : j) {
    if (!t.contains("exponents") || !t.contains("coeff"))
      throw InputError("polynomial term needs \"exponents\" and \"coeff\"");
    const auto& ex = t.at("exponents");
    if (!ex.is_array() || ex.size() != kNumVars)
      throw InputError("\"exponents\" must be a list of 5 integers");
    Exponent e;
    for (int i = 0; i < kNumVars; ++i) e[i] = ex[i].get<int>();
    Integer c;
    if (t.at("coeff").is_string()) {
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0)
        throw InputError("bad integer coefficient");
    } else {
      c = t.at("coeff").get<long>();
    }
    p.add_term(e, c);
  }
  return p;
}

}  // namespace limhodge
