#pragma once

#include <stdexcept>
#include <string>

namespace limhodge {

/// Malformed or inconsistent user input (bad schema, non-lattice coordinates,
/// a height function whose points do not span the polytope, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal identity failed: inexact division, non-Eulerian interval,
/// integer overflow in a geometry kernel. These always indicate a bug or an
/// input outside the supported range, never a recoverable condition.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace limhodge
