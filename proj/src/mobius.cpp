#include "hyperext/mobius.hpp"

#include <algorithm>
#include <numbers>
#include <optional>
#include <ostream>
#include <stdexcept>

namespace hyperext {

MobiusTransform::MobiusTransform(Complex a, Complex b, Complex c, Complex d) {
  const Complex det = a * d - b * c;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (!(std::abs(det) > 1e-14 * scale * scale) || !std::isfinite(std::abs(det))) {
    throw std::invalid_argument("MobiusTransform: degenerate coefficients (ad - bc = 0)");
  }
  const Complex s = std::sqrt(det);
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
}

MobiusTransform MobiusTransform::disk_automorphism(double theta, Complex a) {
  const Complex rot = std::polar(1.0, theta);
  return {rot, -rot * a, -std::conj(a), 1.0};
}

SpherePoint MobiusTransform::operator()(const SpherePoint& p) const {
  if (p.is_infinity()) {
    if (c_ == Complex(0.0, 0.0)) return SpherePoint::infinity();
    return a_ / c_;
  }
  const Complex z = p.value();
  const Complex den = c_ * z + d_;
  if (den == Complex(0.0, 0.0)) return SpherePoint::infinity();
  return (a_ * z + b_) / den;
}

std::ostream& operator<<(std::ostream& os, const MobiusTransform& m) {
  return os << '[' << m.a() << ' ' << m.b() << "; " << m.c() << ' ' << m.d() << ']';
}

SpherePoint apply_mobius(const MobiusTransform& g, const SpherePoint& z) { return g(z); }

MobiusTransform compose_mobius(const MobiusTransform& f, const MobiusTransform& g) {
  return {f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
          f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d()};
}

MobiusTransform inverse_mobius(const MobiusTransform& g) { return {g.d(), -g.b(), -g.c(), g.a()}; }

MobiusTransform reflect_mobius(const MobiusTransform& g) {
  return {std::conj(g.d()), std::conj(g.c()), std::conj(g.b()), std::conj(g.a())};
}

HalfSpacePoint poincare_extend(const MobiusTransform& g, const HalfSpacePoint& p) {
  if (p.is_boundary()) return HalfSpacePoint::boundary(g(p.to_sphere()));
  const Complex z = p.z();
  const double t = p.t();
  const Complex num = g.a() * z + g.b();
  const Complex den = g.c() * z + g.d();
  const double big_d = std::norm(den) + std::norm(g.c()) * t * t;
  const Complex w = (num * std::conj(den) + g.a() * std::conj(g.c()) * (t * t)) / big_d;
  return {w, t / big_d};
}

BallPoint ball_poincare_extend(const MobiusTransform& g, const BallPoint& v) {
  // to_half_space reads the boundary through z -> 1/conj(z); conjugate g accordingly.
  return to_ball(poincare_extend(reflect_mobius(g), to_half_space(v)));
}

Vec3 ball_recenter(const Vec3& a, const Vec3& v) {
  const double a2 = a.norm2();
  const Vec3 diff = v - a;
  const double den = 1.0 - 2.0 * dot(v, a) + v.norm2() * a2;
  return ((1.0 - a2) * diff - diff.norm2() * a) / den;
}

bool preserves_unit_circle(const MobiusTransform& g) {
  for (const Complex probe : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0)}) {
    const SpherePoint w = g(probe);
    if (w.is_infinity() || std::abs(std::abs(w.value()) - 1.0) > 1e-10) return false;
  }
  return true;
}

bool is_disk_automorphism(const MobiusTransform& g) {
  if (!preserves_unit_circle(g)) return false;
  const SpherePoint w = g(Complex(0.0, 0.0));
  return !w.is_infinity() && std::abs(w.value()) < 1.0;
}

namespace {

// Point of R^3 together with infinity (nullopt).
using ExtendedPoint = std::optional<Vec3>;

constexpr Vec3 kInversionCenter{1.0, 0.0, 0.0};

// Inversion in the sphere of radius sqrt(2) about (1, 0, 0). It sends the unit
// circle to the y-axis and the unit disk to the half-plane {x < 0, t = 0}.
ExtendedPoint invert(const ExtendedPoint& p) {
  if (!p) return kInversionCenter;
  const Vec3 d = *p - kInversionCenter;
  const double n2 = d.norm2();
  if (n2 == 0.0) return std::nullopt;
  return kInversionCenter + (2.0 / n2) * d;
}

ExtendedPoint rotate(double cos_phi, double sin_phi, const ExtendedPoint& p) {
  if (!p) return p;
  return Vec3{p->x * cos_phi + p->z * sin_phi, p->y, -p->x * sin_phi + p->z * cos_phi};
}

ExtendedPoint tau_extended(double phi, const ExtendedPoint& p) {
  return invert(rotate(std::cos(phi), std::sin(phi), invert(p)));
}

ExtendedPoint to_extended(const HalfSpacePoint& p) {
  if (p.is_infinity()) return std::nullopt;
  return p.vec();
}

}  // namespace

HalfSpacePoint tau_phi(double phi, const HalfSpacePoint& p) {
  const double reduced = std::remainder(phi, 2.0 * std::numbers::pi);
  if (reduced == 0.0) return p;
  if (std::abs(reduced) == std::numbers::pi && p.is_boundary()) {
    // z -> 1/conj(z), exactly.
    if (p.is_infinity()) return {0.0, 0.0, 0.0};
    const Complex z = p.z();
    if (z == Complex(0.0, 0.0)) return HalfSpacePoint::infinity();
    return {1.0 / std::conj(z), 0.0};
  }
  const ExtendedPoint q = tau_extended(phi, to_extended(p));
  if (!q) return HalfSpacePoint::infinity();
  double t = q->z;
  if (t < 0.0) {
    if (t < -1e-12 * std::max(1.0, q->norm())) {
      throw std::domain_error("tau_phi: image leaves the closed upper half-space");
    }
    t = 0.0;
  }
  return {q->x, q->y, t};
}

OpenBookCoords page_decompose(const HalfSpacePoint& p) {
  if (p.is_infinity()) {
    throw std::domain_error("page_decompose: infinity is tau_pi(0) and must be handled by the caller");
  }
  if (p.is_boundary()) {
    const Complex z = p.z();
    const double r = std::abs(z);
    if (std::abs(r - 1.0) <= 1e-12 || r < 1.0) return {0.0, z};
    return {std::numbers::pi, 1.0 / std::conj(z)};
  }
  // p lies on the sphere x^2 + y^2 + t^2 - 2 m t = 1 through the unit circle.
  const double m = (p.vec().norm2() - 1.0) / (2.0 * p.t());
  const double phi = std::atan2(1.0, -m);
  const ExtendedPoint q = tau_extended(-phi, to_extended(p));
  Complex z(q->x, q->y);
  const double r = std::abs(z);
  if (r > 1.0) z /= r;
  return {phi, z};
}

}  // namespace hyperext
