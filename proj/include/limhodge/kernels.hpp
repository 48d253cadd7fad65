#pragma once

#include "limhodge/linalg.hpp"

namespace limhodge {

/// Lattice points z in the box lo <= z <= hi satisfying <a_i, z> >= b_i
/// for every row i.
struct HalfspaceSystem {
  int dim = 0;
  IMat a;
  IVec b;
  IVec lo, hi;
};

/// Reference implementation: odometer over the box, every inequality tested.
i64 count_lattice_points_serial(const HalfspaceSystem& sys);

/// OpenMP version: the leading dim-1 coordinates are distributed over
/// threads, the range of the last coordinate is solved for directly.
/// Always returns the same value as the serial reference.
i64 count_lattice_points_parallel(const HalfspaceSystem& sys);

/// Enumerate the points themselves (serial, deterministic order).
std::vector<IVec> enumerate_lattice_points(const HalfspaceSystem& sys);

}  // namespace limhodge
