#pragma once

#include <optional>

#include "limhodge/exactpoly.hpp"
#include "limhodge/polytope.hpp"
#include "limhodge/subdivision.hpp"

namespace limhodge {

/// Output of a reconstruction. `inconsistent_degree` is the first degree at
/// which the assembled polynomial of the simplicial compactification fails
/// Poincare duality, or at which the middle degree cannot be fitted.
struct DkResult {
  LaurentPoly e;
  std::optional<int> inconsistent_degree;
};

/// E(V_P; u, w) from chi_y alone: weak Lefschetz fixes total degrees
/// p + q > dim P - 1, the strata of the toric compactification given by a
/// simplicial refinement of the truncated normal fan plus Poincare duality
/// fix degrees < dim P - 1, and chi_y fixes the middle degree.
DkResult dk_hodge_deligne(const LatticePolytope& p);

/// E(X_infinity; u, v, w) from the nearby fiber E(X_infinity; u, v, 1), graded by
/// the power of w, recursing over the faces of P.
DkResult dk_reconstruct(const Subdivision& s);

}  // namespace limhodge
