#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hyproj/config.hpp"
#include "hyproj/geometry.hpp"

namespace hyproj::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(seed_from_env());
  return engine;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

/// |z| log-uniform in [lo, hi], argument uniform in (-pi/2, pi/2) minus a sliver.
inline HalfPlanePoint point(double lo = 1e-3, double hi = 1e6, double sliver = 1e-6) {
  const double half = 0.5 * std::numbers::pi - sliver;
  return HalfPlanePoint::from_complex(std::polar(std::exp(uniform(std::log(lo), std::log(hi))), uniform(-half, half)));
}

inline double slope(double limit = 1.4) { return uniform(-limit, limit); }

inline DiscPoint disc_point(double max_radius = 0.99) {
  return DiscPoint(std::polar(max_radius * std::sqrt(uniform(0.0, 1.0)), uniform(-std::numbers::pi, std::numbers::pi)));
}

}  // namespace hyproj::testing
