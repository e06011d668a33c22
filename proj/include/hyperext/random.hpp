#pragma once

#include <cstdint>
#include <random>

#include "hyperext/geometry.hpp"

namespace hyperext {

/// Seeded sampler used wherever the library draws random points.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the standard;
/// doubles are built from the top 53 bits of each draw, so a seed reproduces the same
/// samples on every conforming implementation (std::uniform_real_distribution does not
/// promise that).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  Complex complex_in_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    return {re, uniform(-half_width, half_width)};
  }
  /// Uniform in the disk |z| < radius.
  Complex complex_in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, uniform(0.0, 6.283185307179586));
  }
  /// Uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 6.283185307179586);
    const double s = std::sqrt(1.0 - z * z);
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperext
