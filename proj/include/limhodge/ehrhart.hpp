#pragma once

#include <vector>

#include "limhodge/exactpoly.hpp"
#include "limhodge/polytope.hpp"

namespace limhodge {

/// f_P(0), ..., f_P(count-1).
std::vector<Integer> ehrhart_values(const LatticePolytope& p, int count);

/// h*(P; u): 1 + sum_{m>0} f_P(m) u^m = h*(P;u) / (1-u)^{dim P + 1}.
/// h*(empty) = 1. Results are cached process-wide by vertex set.
LaurentPoly h_star(const LatticePolytope& p);

/// l*(P; u) = sum over faces Q (including the empty face) of
/// (-1)^{dim P - dim Q} h*(Q; u) g([Q, P]*; u).  l*(empty) = 1.
LaurentPoly local_h_star(const LatticePolytope& p);

/// Same, with the face lattice supplied by the caller.
LaurentPoly local_h_star(const LatticePolytope& p, const FaceLattice& faces);

}  // namespace limhodge
