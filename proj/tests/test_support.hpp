#pragma once

#include <cmath>
#include <vector>

#include "hyperext/random.hpp"
#include "hyperext/rational.hpp"

namespace hyperext::testing {

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

inline double gap(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

inline double gap(const HalfSpacePoint& a, const HalfSpacePoint& b) { return (a.vec() - b.vec()).norm(); }

/// Euclidean gap relative to the size of the reference point.
inline double rel_gap(const HalfSpacePoint& a, const HalfSpacePoint& b) {
  return gap(a, b) / std::max(1.0, b.norm());
}

inline HalfSpacePoint random_interior(Sampler& s, double half_width = 2.0) {
  const Complex z = s.complex_in_box(half_width);
  return {z, s.uniform(0.05, 2.0)};
}

inline MobiusTransform random_mobius(Sampler& s) {
  while (true) {
    const Complex a = s.complex_in_box(2.0), b = s.complex_in_box(2.0), c = s.complex_in_box(2.0),
                  d = s.complex_in_box(2.0);
    if (std::abs(a * d - b * c) > 0.3) return {a, b, c, d};
  }
}

inline MobiusTransform random_disk_automorphism(Sampler& s) {
  return MobiusTransform::disk_automorphism(s.uniform(-3.14, 3.14), s.complex_in_disk(0.8));
}

/// Random reduced rational map of the given degree with well separated zeros and poles.
inline RationalMap random_rational(Sampler& s, int degree) {
  while (true) {
    std::vector<Complex> zeros, poles;
    for (int i = 0; i < degree; ++i) zeros.push_back(s.complex_in_box(1.5));
    const int pole_count = static_cast<int>(s.next() % static_cast<unsigned>(degree + 1));
    for (int i = 0; i < pole_count; ++i) poles.push_back(s.complex_in_box(1.5));
    bool separated = true;
    std::vector<Complex> all = zeros;
    all.insert(all.end(), poles.begin(), poles.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) separated = separated && std::abs(all[i] - all[j]) > 0.2;
    }
    if (!separated) continue;
    const Complex lead = s.complex_in_disk(1.0) + Complex(0.5, 0.0);
    return {Polynomial::from_roots(zeros, lead), Polynomial::from_roots(poles)};
  }
}

inline std::vector<Complex> random_disk_points(Sampler& s, int count, double radius = 0.8) {
  std::vector<Complex> v;
  while (static_cast<int>(v.size()) < count) {
    const Complex a = s.complex_in_disk(radius);
    bool ok = true;
    for (const Complex& b : v) ok = ok && std::abs(a - b) > 0.1;
    if (ok) v.push_back(a);
  }
  return v;
}

}  // namespace hyperext::testing
