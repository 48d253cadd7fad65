#include "limhodge/poset.hpp"

#include <algorithm>

#include "limhodge/errors.hpp"

namespace limhodge {

LaurentPoly t_minus_one_pow(int k) {
  static std::mutex mu;
  static std::vector<LaurentPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back(LaurentPoly(1L));
  while (static_cast<int>(cache.size()) <= k)
    cache.push_back(cache.back() * (LaurentPoly::var(Var::T) - 1));
  return cache[k];
}

EulerianPoset::EulerianPoset(std::vector<int> ranks, std::vector<std::vector<char>> leq)
    : rank_(std::move(ranks)), leq_(std::move(leq)) {
  const int n = size();
  if (n == 0) throw InputError("empty poset");
  bottom_ = top_ = -1;
  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      if (!leq_[x][y]) is_bottom = false;
      if (!leq_[y][x]) is_top = false;
    }
    if (is_bottom) bottom_ = x;
    if (is_top) top_ = x;
  }
  if (bottom_ < 0) throw InputError("poset lacks a least element");
}

EulerianPoset EulerianPoset::from_sets(const std::vector<std::vector<int>>& sets,
                                       std::vector<int> ranks) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      leq[a][b] = std::includes(sets[b].begin(), sets[b].end(), sets[a].begin(), sets[a].end());
  return EulerianPoset(std::move(ranks), std::move(leq));
}

std::vector<int> EulerianPoset::interval(int x, int y) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (leq_[x][z] && leq_[z][y]) out.push_back(z);
  return out;
}

std::vector<int> EulerianPoset::up_set(int x) const {
  std::vector<int> out;
  for (int z = 0; z < size(); ++z)
    if (leq_[x][z]) out.push_back(z);
  return out;
}
std::vector<int> EulerianPoset::down_set(int y) const { return interval(bottom_, y); }

bool EulerianPoset::interval_is_eulerian(int x, int y) const {
  int balance = 0;
  for (int z : interval(x, y)) balance += (rank_[z] % 2 == 0) ? 1 : -1;
  return balance == 0;
}

bool EulerianPoset::is_eulerian() const {
  const int n = size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !leq_[x][y]) continue;
      if (rank_[x] >= rank_[y]) return false;
      if (!interval_is_eulerian(x, y)) return false;
    }
  return true;
}

LaurentPoly EulerianPoset::solve(int n, const LaurentPoly& rhs) const {
  // t^n g(1/t) - g(t) = rhs with deg g < n/2: read g off the low coefficients.
  LaurentPoly g;
  for (int i = 0; 2 * i < n; ++i) {
    Exponent e{};
    e[static_cast<int>(Var::T)] = i;
    g.add_term(e, -rhs.coeff(e));
  }
  LaurentPoly lhs = substitute(g, subs::invert({Var::T}));
  Exponent sh{};
  sh[static_cast<int>(Var::T)] = n;
  lhs = lhs.shifted(sh) - g;
  if (!(lhs == rhs)) throw ComputationError("g-polynomial recursion has no solution");
  return g;
}

LaurentPoly EulerianPoset::g(int x, int y) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->g.find({x, y});
    if (it != memo_->g.end()) return it->second;
  }
  if (!leq_[x][y]) throw InputError("g of an empty interval");
  const int n = rank_[y] - rank_[x];
  LaurentPoly result(1L);
  if (n > 0) {
    if (!interval_is_eulerian(x, y)) throw ComputationError("interval is not Eulerian");
    LaurentPoly rhs;
    for (int z : interval(x, y)) {
      if (z == y) continue;
      rhs += t_minus_one_pow(n - (rank_[z] - rank_[x])) * g(x, z);
    }
    result = solve(n, rhs);
  }
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->g.try_emplace({x, y}, result);
  return result;
}

LaurentPoly EulerianPoset::g_dual(int x, int y) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->g_dual.find({x, y});
    if (it != memo_->g_dual.end()) return it->second;
  }
  if (!leq_[x][y]) throw InputError("g of an empty interval");
  const int n = rank_[y] - rank_[x];
  LaurentPoly result(1L);
  if (n > 0) {
    if (!interval_is_eulerian(x, y)) throw ComputationError("interval is not Eulerian");
    LaurentPoly rhs;
    for (int z : interval(x, y)) {
      if (z == x) continue;
      rhs += t_minus_one_pow(rank_[z] - rank_[x]) * g_dual(z, y);
    }
    result = solve(n, rhs);
  }
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->g_dual.try_emplace({x, y}, result);
  return result;
}

std::pair<LaurentPoly, LaurentPoly> EulerianPoset::inversion_sums(int x, int y) const {
  LaurentPoly a, b;
  for (int z : interval(x, y)) {
    const int sign = ((rank_[z] - rank_[x]) % 2 == 0) ? 1 : -1;
    a += LaurentPoly(static_cast<long>(sign)) * g(x, z) * g_dual(z, y);
    b += LaurentPoly(static_cast<long>(sign)) * g_dual(x, z) * g(z, y);
  }
  return {a, b};
}

bool EulerianPoset::inversion_holds(int x, int y) const {
  auto [a, b] = inversion_sums(x, y);
  return a.is_zero() && b.is_zero();
}

EulerianPoset EulerianPoset::dual() const {
  if (top_ < 0) throw InputError("dual of a poset without greatest element");
  const int n = size();
  std::vector<int> ranks(n);
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int x = 0; x < n; ++x) {
    ranks[x] = rank_[top_] - rank_[x];
    for (int y = 0; y < n; ++y) leq[x][y] = leq_[y][x];
  }
  return EulerianPoset(std::move(ranks), std::move(leq));
}

}  // namespace limhodge
