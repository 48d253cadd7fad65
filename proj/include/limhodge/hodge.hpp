#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "limhodge/exactpoly.hpp"
#include "limhodge/fans.hpp"
#include "limhodge/invariants.hpp"
#include "limhodge/polytope.hpp"
#include "limhodge/subdivision.hpp"

namespace limhodge {

/// A cell gamma of a tropical polyhedral structure together with the
/// realization of [init_gamma X] (in u, v, or in L).
struct TropicalCell {
  int dim = 0;
  bool bounded = true;
  LaurentPoly cls;
};

/// sum over bounded cells of (-1)^{dim gamma} [init_gamma X].
LaurentPoly nearby_fiber_from_cells(const std::vector<TropicalCell>& cells);

/// Cells of the tropical hypersurface dual to S: one per cell F of S with
/// dim F >= 1, of dimension dim P - dim F, bounded iff F is interior, with class
/// E(V_F; u, v) (uv - 1)^{dim P - dim F}.
std::vector<TropicalCell> tropical_cells(const Subdivision& s);

/// The L-form of a polynomial in u, v that lies in Z[uv] (u^a v^a -> L^a).
std::optional<LaurentPoly> to_L_form(const LaurentPoly& p);
/// L -> uv.
LaurentPoly from_L_form(const LaurentPoly& p);

/// chi_y: u E = (u - 1)^{dim P} + (-1)^{dim P + 1} h*(P; u).
LaurentPoly chi_y(const LatticePolytope& p);
/// (-1)^{dim P + 1} h*(P; 1).
Integer euler_characteristic(const LatticePolytope& p);
/// E(V_P; u, w): uw E = (uw - 1)^{dim P} + (-1)^{dim P + 1} h*(P; u, w).
LaurentPoly hodge_deligne(const LatticePolytope& p);
/// sum over interior cells F of chi_y(F) (1 - u)^{dim P - dim F}.
LaurentPoly chi_y_cell_sum(const Subdivision& s);

/// E(X_Q,infinity; u, v, w) for the face Q (default P):
/// uvw^2 E = (uvw^2 - 1)^{dim Q} + (-1)^{dim Q + 1} h*(Q, S|_Q; u, v, w).
LaurentPoly refined_E(const InvariantBundle& b, int face = -1);
/// sum over cells F interior to Q of E(V_F; u, v) (1 - uv)^{dim Q - dim F}.
LaurentPoly nearby_fiber_E(const InvariantBundle& b, int face = -1);

struct HodgeNumberTable {
  int dim = 0;
  CoeffTable refined;                             // h^{p,q,r}
  std::map<std::array<int, 2>, Integer> limit;    // h^{p,q} of H^{dim P - 1}_{prim}
  std::map<std::array<int, 2>, Integer> local;    // weight dim P - 1 part
};
/// Throws ComputationError if the constant term is not 1 or an entry is
/// negative.
HodgeNumberTable refined_hodge_numbers(const InvariantBundle& b);

/// uvw^2 E_int = uvw^2 E_int,Lef(P; uvw^2) + (-1)^{dim P + 1} l*(P, S; u, v) w^{dim P + 1}.
LaurentPoly intersection_E(const InvariantBundle& b);
/// sum over nonempty faces Q of E(X_Q,infinity) g([Q, P]^*; uvw^2), each
/// term computed on (Q normalized, S|_Q).
LaurentPoly sum_over_strata_E_int(const InvariantBundle& b);

/// Partial compactification given by a refinement of a subfan of the
/// truncated normal fan; sigma of the refinement indexes nf.fan.
LaurentPoly partial_compactification_E(const InvariantBundle& b, const TruncatedNormalFan& nf,
                                       const Fan& refinement);
/// The nearby fiber analogue, in u, v (weights in uv - 1).
LaurentPoly partial_compactification_psi(const InvariantBundle& b, const TruncatedNormalFan& nf,
                                         const Fan& refinement);
/// psi of the closure in the toric variety of the normal fan as a cell sum:
/// sum over nonempty F of E(V_F; u, v) (1 - uv)^{dim sigma(F) - dim F}.
LaurentPoly compact_psi_from_cells(const Subdivision& s);

/// uvw^2 E_st = sum_Q (-w)^{dim Q + 1} l*(Q, S|_Q; u, v) l*(Q^*; uvw^2).
/// Throws InputError unless P is reflexive.
LaurentPoly stringy_E(const InvariantBundle& b);
/// Generic fiber version in u, w:
/// uw E_st = sum_Q (-w)^{dim Q + 1} l*(Q, S|_Q; u w^-1, 1) l*(Q^*; uw).
LaurentPoly stringy_E_generic(const InvariantBundle& b);

/// Lowest w-degree k > dim P + 1 at which the coefficient of w^k in uvw^2 E
/// differs from that of (uvw^2 - 1)^e.
std::optional<int> weak_lefschetz_violation(const LaurentPoly& e, int exponent, int dim_p);
/// The u, w analogue: lowest total degree p + q > dim P + 1 where uw E and
/// (uw - 1)^e differ.
std::optional<int> weak_lefschetz_violation_uw(const LaurentPoly& e, int exponent, int dim_p);

}  // namespace limhodge
