#include "hyperext/star.hpp"

#include <numbers>
#include <stdexcept>

namespace hyperext {

ExpCoords::ExpCoords(double x_, double y_, double t_) : x(x_), y(y_), t(t_) {
  if (!std::isfinite(x_) || !std::isfinite(y_) || !std::isfinite(t_)) {
    throw std::invalid_argument("ExpCoords: non-finite coordinates");
  }
  if (t_ < 0.0) throw std::invalid_argument("ExpCoords: t must be non-negative");
}

HalfSpacePoint exp_hat(const ExpCoords& c) {
  const double scale = std::exp(c.x);
  const double sech = 1.0 / std::cosh(c.t);
  return {scale * sech * std::cos(c.y), scale * sech * std::sin(c.y), scale * std::tanh(c.t)};
}

ExpCoords exp_hat_inverse(const HalfSpacePoint& p) {
  if (p.is_infinity()) throw std::domain_error("exp_hat_inverse: infinity has no preimage");
  const double h = std::hypot(p.x(), p.y());
  if (h == 0.0) throw std::domain_error("exp_hat_inverse: points of the vertical axis have no preimage");
  double y = std::atan2(p.y(), p.x());
  if (y == -std::numbers::pi) y = std::numbers::pi;
  return {std::log(p.norm()), y, std::asinh(p.t() / h)};
}

HalfSpacePoint star_product(const HalfSpacePoint& a, const HalfSpacePoint& b) {
  if (a.is_infinity() || b.is_infinity()) {
    const HalfSpacePoint& other = a.is_infinity() ? b : a;
    if (!other.is_infinity() && other.norm() == 0.0) {
      throw std::domain_error("star_product: 0 * infinity is undefined");
    }
    return HalfSpacePoint::infinity();
  }
  const double ra = a.norm();
  const double rb = b.norm();
  if (ra == 0.0 || rb == 0.0) return {0.0, 0.0, 0.0};
  const double wa = a.t();
  const double wb = b.t();
  const double k = (ra * rb) / (ra * rb + wa * wb);
  return {(a.z() * b.z()) * k, (wa * rb + wb * ra) * k};
}

HalfSpacePoint q_hat(const HalfSpacePoint& p) {
  if (p.is_infinity()) return p;
  const double x = p.x();
  const double y = p.y();
  const double t = p.t();
  const double s = x * x + y * y + t * t;
  if (s == 0.0) return p;
  // Keep this evaluation order: A == 1 exactly when t == 0.
  const double a = s / (s + t * t);
  return {a * (x * x - y * y), a * (2 * x * y), a * (2 * t * std::sqrt(s))};
}

HalfSpacePoint q_hat_c(Complex c, const HalfSpacePoint& p) {
  if (p.is_infinity()) return p;
  const HalfSpacePoint q = q_hat(p);
  return {q.x() + c.real(), q.y() + c.imag(), q.t()};
}

HalfSpacePoint product_extension(const MobiusFactorization& f, const HalfSpacePoint& p) {
  if (f.factors.empty()) throw std::invalid_argument("product_extension: empty factorization");
  HalfSpacePoint acc = poincare_extend(f.factors.front().map, p);
  for (std::size_t i = 1; i < f.factors.size(); ++i) {
    acc = star_product(acc, poincare_extend(f.factors[i].map, p));
  }
  return acc;
}

HalfSpacePoint vertical_extension(const BoundaryMap& f, double lambda, const HalfSpacePoint& p) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("vertical_extension: lambda must be positive");
  }
  if (p.is_infinity()) {
    if (f(SpherePoint::infinity()).is_infinity()) return p;
    throw std::domain_error("vertical_extension: the boundary map does not fix infinity");
  }
  const SpherePoint w = f(p.z());
  if (w.is_infinity()) return HalfSpacePoint::infinity();
  return {w.value(), lambda * p.t()};
}

}  // namespace hyperext
