#include "hyperext/geometry.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace hyperext {

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

SpherePoint::SpherePoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::invalid_argument("SpherePoint: non-finite coordinates (use SpherePoint::infinity())");
  }
}

Complex SpherePoint::value() const {
  if (infinite_) throw std::domain_error("SpherePoint: infinity has no finite value");
  return z_;
}

std::ostream& operator<<(std::ostream& os, const SpherePoint& p) {
  if (p.is_infinity()) return os << "inf";
  return os << p.value();
}

HalfSpacePoint::HalfSpacePoint(double x, double y, double t) : x_(x), y_(y), t_(t) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(t)) {
    throw std::invalid_argument("HalfSpacePoint: non-finite coordinates");
  }
  if (t < 0.0) throw std::invalid_argument("HalfSpacePoint: negative height");
  if (t_ == 0.0) t_ = 0.0;  // drop the sign of -0.0
}

HalfSpacePoint HalfSpacePoint::boundary(const SpherePoint& z) {
  if (z.is_infinity()) return infinity();
  return {z.value(), 0.0};
}

namespace {
[[noreturn]] void throw_infinite_coordinate() {
  throw std::domain_error("HalfSpacePoint: infinity has no coordinates");
}
}  // namespace

double HalfSpacePoint::x() const {
  if (infinite_) throw_infinite_coordinate();
  return x_;
}
double HalfSpacePoint::y() const {
  if (infinite_) throw_infinite_coordinate();
  return y_;
}
double HalfSpacePoint::t() const {
  if (infinite_) throw_infinite_coordinate();
  return t_;
}
Complex HalfSpacePoint::z() const {
  if (infinite_) throw_infinite_coordinate();
  return {x_, y_};
}
Vec3 HalfSpacePoint::vec() const {
  if (infinite_) throw_infinite_coordinate();
  return {x_, y_, t_};
}

SpherePoint HalfSpacePoint::to_sphere() const {
  if (infinite_) return SpherePoint::infinity();
  if (t_ != 0.0) throw std::domain_error("HalfSpacePoint: interior point is not on the sphere at infinity");
  return Complex(x_, y_);
}

std::ostream& operator<<(std::ostream& os, const HalfSpacePoint& p) {
  if (p.is_infinity()) return os << "inf";
  return os << '(' << p.x() << ", " << p.y() << ", " << p.t() << ')';
}

BallPoint::BallPoint(const Vec3& v) : v_(v) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z)) {
    throw std::invalid_argument("BallPoint: non-finite coordinates");
  }
  const double n = v.norm();
  if (n > 1.0 + kBoundaryTolerance) throw std::invalid_argument("BallPoint: outside the closed unit ball");
  if (n > 1.0) v_ = v / n;
}

std::ostream& operator<<(std::ostream& os, const BallPoint& p) { return os << p.vec(); }

Vec3 stereographic_lift(const SpherePoint& p) {
  if (p.is_infinity()) return {0.0, 0.0, 1.0};
  const Complex z = p.value();
  const double n2 = std::norm(z);
  if (n2 <= 1.0) {
    const double s = 1.0 + n2;
    return {2.0 * z.real() / s, 2.0 * z.imag() / s, (n2 - 1.0) / s};
  }
  // Through w = 1/z so that large |z| neither overflows nor loses the pole.
  const Complex w = 1.0 / z;
  const double m2 = std::norm(w);
  const double s = 1.0 + m2;
  return {2.0 * w.real() / s, -2.0 * w.imag() / s, (1.0 - m2) / s};
}

SpherePoint stereographic_project(const Vec3& p) {
  if (std::abs(p.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("stereographic_project: point is not on the unit sphere");
  }
  if (p.z <= 0.0) return Complex(p.x, p.y) / (1.0 - p.z);
  // (X + iY)/(1 - Z) = (1 + Z)/(X - iY) on the sphere; stable near the north pole.
  const Complex h(p.x, -p.y);
  if (h == Complex(0.0, 0.0)) return SpherePoint::infinity();
  return (1.0 + p.z) / h;
}

double chordal_distance(const SpherePoint& a, const SpherePoint& b) {
  return (stereographic_lift(a) - stereographic_lift(b)).norm();
}

HalfSpacePoint to_half_space(const BallPoint& p) {
  const Vec3& v = p.vec();
  const Vec3 d{v.x, v.y, v.z + 1.0};
  const double n2 = d.norm2();
  if (n2 == 0.0) return HalfSpacePoint::infinity();
  double t = p.is_boundary() ? 0.0 : (1.0 - v.norm2()) / n2;
  t = std::max(t, 0.0);
  return {2.0 * v.x / n2, 2.0 * v.y / n2, t};
}

BallPoint to_ball(const HalfSpacePoint& p) {
  if (p.is_infinity()) return BallPoint(0.0, 0.0, -1.0);
  const double x = p.x();
  const double y = p.y();
  const double t = p.t();
  const double n2 = x * x + y * y + (t + 1.0) * (t + 1.0);
  const double h2 = x * x + y * y + t * t;
  Vec3 v{2.0 * x / n2, 2.0 * y / n2, (1.0 - h2) / n2};
  if (t == 0.0) v = v / v.norm();
  return BallPoint(v);
}

double hyperbolic_distance(const HalfSpacePoint& p, const HalfSpacePoint& q) {
  if (!p.is_interior() || !q.is_interior()) {
    throw std::invalid_argument("hyperbolic_distance: boundary points are at infinite distance");
  }
  const double chord = (p.vec() - q.vec()).norm();
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.t() * q.t())));
}

double ball_hyperbolic_distance(const BallPoint& p, const BallPoint& q) {
  const double a = 1.0 - p.vec().norm2();
  const double b = 1.0 - q.vec().norm2();
  if (a <= 0.0 || b <= 0.0 || p.is_boundary() || q.is_boundary()) {
    throw std::invalid_argument("ball_hyperbolic_distance: boundary points are at infinite distance");
  }
  return 2.0 * std::asinh((p.vec() - q.vec()).norm() / std::sqrt(a * b));
}

namespace {

// Half-space point as a vector of the hyperboloid -X0^2 + X1^2 + X2^2 + X3^2 = -1.
struct Hyperboloid {
  double x0, x1, x2, x3;
};

Hyperboloid to_hyperboloid(const HalfSpacePoint& p) {
  const double t = p.t();
  const double r2 = p.vec().norm2();
  return {(1.0 + r2) / (2.0 * t), p.x() / t, p.y() / t, (1.0 - r2) / (2.0 * t)};
}

HalfSpacePoint from_hyperboloid(const Hyperboloid& h) {
  const double t = 1.0 / (h.x0 + h.x3);
  return {h.x1 * t, h.x2 * t, t};
}

}  // namespace

HalfSpacePoint geodesic_interpolate(const HalfSpacePoint& p, const HalfSpacePoint& q, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("geodesic_interpolate: lambda must lie in [0, 1]");
  }
  const double d = hyperbolic_distance(p, q);
  if (lambda == 0.0 || d == 0.0) return p;
  if (lambda == 1.0) return q;
  const Hyperboloid a = to_hyperboloid(p);
  const Hyperboloid b = to_hyperboloid(q);
  const double sd = std::sinh(d);
  const double wa = std::sinh((1.0 - lambda) * d) / sd;
  const double wb = std::sinh(lambda * d) / sd;
  return from_hyperboloid({wa * a.x0 + wb * b.x0, wa * a.x1 + wb * b.x1, wa * a.x2 + wb * b.x2,
                           wa * a.x3 + wb * b.x3});
}

}  // namespace hyperext
