#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hyproj {

struct CriterionResult {
  int number;
  std::string name;
  bool pass;
  std::string detail;
};

/// Every acceptance criterion at its pinned tolerance, in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// "PASS  3 closeness of equal-slope rays: ..." style line.
std::string format_criterion(const CriterionResult& r);

}  // namespace hyproj
