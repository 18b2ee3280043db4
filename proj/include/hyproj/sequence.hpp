#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hyproj {

/// Adjacent-pair analysis of a finite sequence v[0..m).
struct IncreaseAnalysis {
  /// Smallest N with v[k] - v[k-1] > flat_tolerance for every k > N.
  std::size_t first_increase = 0;
  /// (k, v[k] - v[k-1]) for every pair that fails to increase.
  std::vector<std::pair<std::size_t, double>> violations;
  /// Smallest increment over k > first_increase (+inf when there is none).
  double min_tail_increment = std::numeric_limits<double>::infinity();
};

inline IncreaseAnalysis analyze_increase(std::span<const double> values, double flat_tolerance = 0.0) {
  IncreaseAnalysis out;
  for (std::size_t k = 1; k < values.size(); ++k) {
    const double delta = values[k] - values[k - 1];
    if (!(delta > flat_tolerance)) {
      out.violations.emplace_back(k, delta);
      out.first_increase = k;
    }
  }
  for (std::size_t k = out.first_increase + 1; k < values.size(); ++k)
    out.min_tail_increment = std::min(out.min_tail_increment, values[k] - values[k - 1]);
  return out;
}

}  // namespace hyproj
