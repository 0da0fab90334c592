#pragma once

// The acceptance suite: one property or oracle check per criterion, shared by
// the acceptance test binary and `qgt validate`.

#include "qgt/lattice.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qgt {

enum class ValidationLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every criterion in order.  Quick uses smaller random samples; Full
/// uses the sizes stated in the acceptance list.  `only` restricts the run
/// to one criterion id when nonzero.
std::vector<CriterionResult> run_acceptance(ValidationLevel level, std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {},
                                            int only = 0);

std::string format_result(const CriterionResult& r);

}  // namespace qgt
