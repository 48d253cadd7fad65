#pragma once

#include <string>
#include <vector>

#include "limhodge/subdivision.hpp"

namespace limhodge {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample, or a short summary
  bool soft = false;   // diagnostics that do not fail a run
};

struct CheckOptions {
  bool dk = true;       // DK reconstruction (recursive, the costliest check)
  bool lambda = true;   // Lambda palindromy for two pulling orders
  bool strata = true;   // sum-over-strata equivalence
};

/// Every property of the library that can be checked on a single pair
/// (P, S); S is normalized first so P is full dimensional.
std::vector<CheckResult> check_instance(const Subdivision& s, const CheckOptions& opt = {});

/// Stanley inversion on every interval of the poset with x < y (all pairs
/// when the poset has no top). Returns the first failing pair as text.
CheckResult check_inversion(const std::string& name, const EulerianPoset& b);

}  // namespace limhodge
