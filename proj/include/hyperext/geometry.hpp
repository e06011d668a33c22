#pragma once

// Points of the Riemann sphere and of the two models of hyperbolic 3-space
// (closed upper half-space and closed unit ball), plus the maps between them.

#include <cmath>
#include <complex>
#include <iosfwd>

namespace hyperext {

using Complex = std::complex<double>;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  double norm2() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Vec3 operator*(const Vec3& a, double s) { return s * a; }
  friend Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

std::ostream& operator<<(std::ostream& os, const Vec3& v);

/// A point of the Riemann sphere: a finite complex number or the single point at infinity.
class SpherePoint {
 public:
  SpherePoint(Complex z);  // NOLINT(google-explicit-constructor): a finite complex number is a sphere point
  SpherePoint(double re, double im = 0.0) : SpherePoint(Complex(re, im)) {}

  static SpherePoint infinity() { return SpherePoint(); }

  bool is_infinity() const { return infinite_; }
  /// Finite value; throws std::domain_error at infinity.
  Complex value() const;

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.z_ == b.z_);
  }

 private:
  SpherePoint() : infinite_(true) {}
  Complex z_{};
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const SpherePoint& p);

/// Closed upper half-space {(x, y, t) : t >= 0} together with the point at infinity.
/// t == 0 marks a boundary point, which is identified with the complex number x + iy.
class HalfSpacePoint {
 public:
  HalfSpacePoint(double x, double y, double t);
  HalfSpacePoint(Complex z, double t) : HalfSpacePoint(z.real(), z.imag(), t) {}

  static HalfSpacePoint infinity() { return HalfSpacePoint(); }
  static HalfSpacePoint boundary(const SpherePoint& z);

  bool is_infinity() const { return infinite_; }
  bool is_boundary() const { return infinite_ || t_ == 0.0; }
  bool is_interior() const { return !infinite_ && t_ > 0.0; }
  /// On the vertical axis {x = y = 0, t > 0}.
  bool on_axis() const { return !infinite_ && x_ == 0.0 && y_ == 0.0 && t_ > 0.0; }

  // Coordinate accessors throw std::domain_error at infinity.
  double x() const;
  double y() const;
  double t() const;
  Complex z() const;
  Vec3 vec() const;
  double norm() const { return vec().norm(); }

  /// Boundary point as a sphere point; throws for interior points.
  SpherePoint to_sphere() const;

  friend bool operator==(const HalfSpacePoint& a, const HalfSpacePoint& b) {
    return a.infinite_ == b.infinite_ &&
           (a.infinite_ || (a.x_ == b.x_ && a.y_ == b.y_ && a.t_ == b.t_));
  }

 private:
  HalfSpacePoint() : infinite_(true) {}
  double x_ = 0.0;
  double y_ = 0.0;
  double t_ = 0.0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const HalfSpacePoint& p);

/// Point of the closed unit ball.
class BallPoint {
 public:
  explicit BallPoint(const Vec3& v);
  BallPoint(double x, double y, double z) : BallPoint(Vec3{x, y, z}) {}

  const Vec3& vec() const { return v_; }
  double norm() const { return v_.norm(); }
  bool is_boundary() const { return std::abs(v_.norm() - 1.0) <= kBoundaryTolerance; }

  static constexpr double kBoundaryTolerance = 1e-12;

 private:
  Vec3 v_;
};

std::ostream& operator<<(std::ostream& os, const BallPoint& p);

// Stereographic identification of the unit sphere with the Riemann sphere.
// 0 is the south pole, infinity the north pole.
Vec3 stereographic_lift(const SpherePoint& z);
/// Inverse of stereographic_lift. Requires |norm(p) - 1| <= 1e-9.
SpherePoint stereographic_project(const Vec3& p);

/// Chordal distance |lift(a) - lift(b)|, a bounded metric on the sphere.
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

// Ball <-> half-space transfer: inversion in the sphere with center (0,0,-1) and
// radius sqrt(2). It is an involution, fixes the unit circle of the boundary plane
// and is a hyperbolic isometry. On the boundary it acts as z -> 1/conj(z) relative
// to the stereographic chart.
HalfSpacePoint to_half_space(const BallPoint& p);
BallPoint to_ball(const HalfSpacePoint& p);

/// Hyperbolic distance in the half-space model. Both points must be interior.
double hyperbolic_distance(const HalfSpacePoint& p, const HalfSpacePoint& q);
/// Hyperbolic distance in the ball model. Both points must be interior.
double ball_hyperbolic_distance(const BallPoint& p, const BallPoint& q);

/// Point on the geodesic segment [p, q] at distance lambda * d(p, q) from p.
HalfSpacePoint geodesic_interpolate(const HalfSpacePoint& p, const HalfSpacePoint& q, double lambda);

}  // namespace hyperext
