#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "limhodge/ehrhart.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/subdivision.hpp"

namespace limhodge {

/// The h*-tower of a pair (P, S). Faces Q of P are addressed by their index
/// in S.faces(); S|_Q is never materialized, every sum runs over the cells of
/// S whose carrier lies in Q. Values are computed on demand and memoized;
/// all methods are safe to call concurrently.
class InvariantBundle {
 public:
  explicit InvariantBundle(Subdivision s);

  const Subdivision& subdivision() const { return s_; }
  int top() const { return s_.faces().top(); }

  /// h*(F; u), l*(F; u), h*(F; u, v) of a cell F of S.
  LaurentPoly cell_h_star(int c) const;
  LaurentPoly cell_local_h_star(int c) const;
  LaurentPoly cell_mixed_h_star(int c) const;

  /// h*(Q, S|_Q; u, v) from the definition (cells, links, l*).
  LaurentPoly limit_mixed(int q) const;
  /// The same through mixed h* of the cells of S|_Q not on the boundary of Q.
  LaurentPoly limit_mixed_via_cells(int q) const;
  /// l*(Q, S|_Q; u, v).
  LaurentPoly local_limit_mixed(int q) const;
  /// h*(Q, S|_Q; u, v, w).
  LaurentPoly refined(int q) const;

  LaurentPoly limit_mixed() const { return limit_mixed(top()); }
  LaurentPoly local_limit_mixed() const { return local_limit_mixed(top()); }
  LaurentPoly refined() const { return refined(top()); }

  /// Computes h* of every cell in parallel; later calls hit the cache.
  void prefetch() const;

 private:
  template <class F>
  LaurentPoly memo(std::map<int, LaurentPoly>& table, int key, F compute) const;

  Subdivision s_;
  std::shared_ptr<const EulerianPoset> face_poset_;
  mutable std::mutex mu_;
  mutable std::map<int, LaurentPoly> cell_h_, cell_l_, cell_mixed_, limit_, local_, refined_;
};

/// h*(P; u, v): the limit mixed h* of the trivial subdivision.
LaurentPoly mixed_h_star(const LatticePolytope& p);

/// (Lambda, Phi) for a simplicial refinement of the truncated normal fan of
/// a full-dimensional P (rays in the ambient lattice).
struct LambdaPhi {
  LaurentPoly lambda, phi;
};
LambdaPhi lambda_phi(const InvariantBundle& b, const TruncatedNormalFan& nf, const Fan& refinement);
/// Mixed variant: every h*(Q, S|_Q; u, v, w) replaced by h*(Q, S|_Q; u w^-1, 1, w).
LambdaPhi lambda_phi_mixed(const InvariantBundle& b, const TruncatedNormalFan& nf,
                           const Fan& refinement);
/// sum over gamma' with sigma(gamma') = gamma of (x - 1)^{dim gamma - dim gamma'},
/// x = u v w^2 (or u w for the mixed variant), indexed by coarse cone.
std::vector<LaurentPoly> sigma_weights(const Fan& coarse, const Fan& refinement, const LaurentPoly& x);

/// E_int,Lef(P; t) with (t-1) E = t^{dim P} g([empty,P]*; 1/t) - g([empty,P]*; t).
LaurentPoly e_int_lef(const LatticePolytope& p);

/// Coefficients h*_{p,q,r} of h*(P,S;u,v,w) = 1 + uvw^2 sum h*_{p,q,r} u^p v^q w^r
/// obtainable from lattice point counts. For dim P <= 3 the table is complete
/// (every 0 <= p,q,r <= dim P - 1); for larger dimensions only the entries
/// with a closed form are present.
using CoeffTable = std::map<std::array<int, 3>, Integer>;
CoeffTable small_coeff_oracle(const Subdivision& s);
/// One coefficient; throws InputError if it has no closed form.
Integer small_coeff(const Subdivision& s, int p, int q, int r);

/// Table of h*_{p,q,r} read off a refined h* polynomial (same convention).
CoeffTable coefficient_table(const LaurentPoly& refined_h_star);

}  // namespace limhodge
