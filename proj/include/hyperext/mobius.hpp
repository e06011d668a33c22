#pragma once

// Mobius transformations of the Riemann sphere, their Poincare extensions to
// hyperbolic 3-space, and the rotations tau_phi about the unit circle that sweep
// the closed half-space as an open book with binding S^1.

#include <iosfwd>

#include "hyperext/geometry.hpp"

namespace hyperext {

/// z -> (az + b)/(cz + d), stored with ad - bc = 1 (unique up to a global sign).
class MobiusTransform {
 public:
  /// Throws std::invalid_argument when ad - bc vanishes.
  MobiusTransform(Complex a, Complex b, Complex c, Complex d);

  static MobiusTransform identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static MobiusTransform translation(Complex shift) { return {1.0, shift, 0.0, 1.0}; }
  static MobiusTransform scaling(Complex factor) { return {factor, 0.0, 0.0, 1.0}; }
  static MobiusTransform reciprocal() { return {0.0, 1.0, 1.0, 0.0}; }
  /// e^{i theta} (z - a)/(1 - conj(a) z); a disk automorphism when |a| < 1.
  static MobiusTransform disk_automorphism(double theta, Complex a);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  SpherePoint operator()(const SpherePoint& z) const;

 private:
  Complex a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const MobiusTransform& m);

SpherePoint apply_mobius(const MobiusTransform& g, const SpherePoint& z);
/// outer o inner.
MobiusTransform compose_mobius(const MobiusTransform& outer, const MobiusTransform& inner);
MobiusTransform inverse_mobius(const MobiusTransform& g);
/// kappa o g o kappa with kappa(z) = 1/conj(z): the same map read through the reflected chart.
MobiusTransform reflect_mobius(const MobiusTransform& g);

/// Poincare extension of g to the closed upper half-space (the quaternionic
/// action (aq + b)(cq + d)^-1 on q = z + tj). Agrees with apply_mobius on the boundary.
HalfSpacePoint poincare_extend(const MobiusTransform& g, const HalfSpacePoint& p);

/// Poincare extension acting on the ball model, relative to the stereographic chart
/// of the boundary sphere.
BallPoint ball_poincare_extend(const MobiusTransform& g, const BallPoint& v);

/// Ball isometry sending a to the origin:
/// ((1 - |a|^2)(v - a) - |v - a|^2 a) / (1 - 2<v, a> + |v|^2 |a|^2).
/// Its inverse is ball_recenter(-a, .).
Vec3 ball_recenter(const Vec3& a, const Vec3& v);

/// True when g maps the unit circle onto itself (|g(1)| = |g(i)| = |g(-1)| = 1 within 1e-10).
bool preserves_unit_circle(const MobiusTransform& g);
/// Circle-preserving and mapping the open unit disk to itself.
bool is_disk_automorphism(const MobiusTransform& g);

/// Mobius rotation of angle phi about the unit circle of the boundary plane.
/// tau_0 is the identity, tau_pi restricts to z -> 1/conj(z), and for phi in (0, pi)
/// the unit disk is carried onto the spherical cap ("page") through S^1 at angle phi.
/// Throws std::domain_error if the image leaves the closed upper half-space.
HalfSpacePoint tau_phi(double phi, const HalfSpacePoint& p);

/// Position (phi, z) of a point in the open book: p = tau_phi(z), z in the closed disk.
struct OpenBookCoords {
  double phi = 0.0;
  Complex z;
};

/// Inverse of (phi, z) -> tau_phi(z). Boundary points outside the disk land on the
/// phi = pi page as 1/conj(z); binding points get phi = 0. Throws for infinity.
OpenBookCoords page_decompose(const HalfSpacePoint& p);

}  // namespace hyperext
