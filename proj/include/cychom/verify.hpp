#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cychom {

struct CaseInfo {
  std::string name;
  std::string description;
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  ///< expected vs computed, first discrepancies
};

/// Named, self-contained checks of closed formulas against computation.
std::vector<CaseInfo> verify_cases();
/// Throws DomainError for unknown names. `seed` drives the randomized cases.
CaseResult run_case(const std::string& name, std::uint64_t seed = 1);

}  // namespace cychom
