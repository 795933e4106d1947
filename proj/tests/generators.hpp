#pragma once

// Hand-rolled property generators. Fixed seeds keep failures reproducible.

#include <cmath>
#include <random>

#include "avogrip/mechanism.hpp"
#include "avogrip/units.hpp"

namespace gen {

inline constexpr int kCases = 1000;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline avogrip::GripperGeometry geometry(Rng& rng) {
  using avogrip::units::deg_to_rad;
  avogrip::GripperGeometry g;
  g.center_distance = rng.uniform(0.02, 0.12);
  g.finger_offset = g.center_distance * rng.uniform(0.15, 0.95);
  g.pinion_radius = rng.uniform(0.005, 0.03);
  g.ring_radius = g.pinion_radius * rng.uniform(1.5, 8.0);
  g.finger_count = rng.integer(2, 8);
  g.finger_diameter = rng.uniform(0.002, 0.02);
  g.alpha_range = {deg_to_rad(rng.uniform(5.0, 40.0)), deg_to_rad(rng.uniform(90.0, 170.0))};
  return g;
}

inline double alpha_in(Rng& rng, const avogrip::GripperGeometry& g) {
  return rng.uniform(g.alpha_range.min, g.alpha_range.max);
}

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + 1e-300;
}

}  // namespace gen
