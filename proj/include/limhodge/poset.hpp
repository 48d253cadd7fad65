#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "limhodge/exactpoly.hpp"

namespace limhodge {

/// Finite graded poset with a least element and usually a greatest one
/// (top() is -1 when there is none, as for the cell poset of a nontrivial
/// subdivision). Elements are 0..size()-1; the relation is a dense matrix.
///
/// g-polynomials of intervals are memoized per poset. The cache is shared by
/// copies and guarded by a mutex, so g() may be called from several threads.
class EulerianPoset {
 public:
  EulerianPoset(std::vector<int> ranks, std::vector<std::vector<char>> leq);

  /// Inclusion order on a family of sorted integer sets.
  static EulerianPoset from_sets(const std::vector<std::vector<int>>& sets, std::vector<int> ranks);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(int x) const { return rank_[x]; }
  bool leq(int x, int y) const { return leq_[x][y] != 0; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Elements z with x <= z <= y, in index order.
  std::vector<int> interval(int x, int y) const;
  /// Elements z >= x / z <= y.
  std::vector<int> up_set(int x) const;
  std::vector<int> down_set(int y) const;

  /// Equal numbers of odd and even rank elements in [x, y] (x < y).
  bool interval_is_eulerian(int x, int y) const;
  /// Every nontrivial interval is Eulerian and ranks increase along covers.
  bool is_eulerian() const;

  /// g([x, y]; t) and g([x, y]*; t) as polynomials in t. Throws
  /// ComputationError if the defining identity cannot be satisfied, which
  /// happens exactly when the interval is not Eulerian.
  LaurentPoly g(int x, int y) const;
  LaurentPoly g_dual(int x, int y) const;
  LaurentPoly g() const { return g(bottom_, top_); }
  LaurentPoly g_dual() const { return g_dual(bottom_, top_); }

  /// The two sums of the Stanley inversion formula on [x, y]; both vanish
  /// for Eulerian intervals of positive rank.
  std::pair<LaurentPoly, LaurentPoly> inversion_sums(int x, int y) const;
  bool inversion_holds(int x, int y) const;

  /// Same elements, order reversed, rank(top) - rank.
  EulerianPoset dual() const;

 private:
  struct Memo {
    std::mutex mu;
    std::map<std::pair<int, int>, LaurentPoly> g, g_dual;
  };
  LaurentPoly solve(int n, const LaurentPoly& rhs) const;

  std::vector<int> rank_;
  std::vector<std::vector<char>> leq_;
  int bottom_ = 0, top_ = 0;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// (t - 1)^k as a polynomial in t.
LaurentPoly t_minus_one_pow(int k);

}  // namespace limhodge
