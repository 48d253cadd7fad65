#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "limhodge/polytope.hpp"
#include "limhodge/subdivision.hpp"

namespace limhodge {

/// Full-dimensional lattice polytope in Z^dim: hull of a few random points
/// in a small box (retried until full dimensional).
LatticePolytope random_polytope(std::mt19937_64& rng, int dim);

/// Every lattice point of a random polytope with a random height p/q,
/// 0 <= p <= 6, 1 <= q <= 3.
std::vector<HeightPoint> random_heights(std::mt19937_64& rng, int dim);

/// regular_subdivision(random_heights(rng, dim)).
Subdivision random_subdivision(std::mt19937_64& rng, int dim);

}  // namespace limhodge
