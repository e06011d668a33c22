#include "hyperext/rational.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace hyperext {

RationalMap::RationalMap(Polynomial num, Polynomial den, Trusted)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
  if (num_.is_zero()) throw std::invalid_argument("RationalMap: constant maps are not allowed");
  if (degree() < 1) throw std::invalid_argument("RationalMap: constant maps are not allowed");
}

RationalMap::RationalMap(Polynomial num, Polynomial den)
    : RationalMap(std::move(num), std::move(den), Trusted{}) {
  if (num_.degree() >= 1 && den_.degree() >= 1) {
    const auto zeros = polynomial_roots(num_);
    const auto poles = polynomial_roots(den_);
    for (const Root& z : zeros) {
      for (const Root& p : poles) {
        if (std::abs(z.value - p.value) <= 1e-9) {
          throw std::invalid_argument("RationalMap: numerator and denominator share a root (not reduced)");
        }
      }
    }
  }
}

RationalMap RationalMap::from_reduced(Polynomial num, Polynomial den) {
  return {std::move(num), std::move(den), Trusted{}};
}

RationalMap RationalMap::from_mobius(const MobiusTransform& g) {
  return from_reduced(Polynomial({g.b(), g.a()}), Polynomial({g.d(), g.c()}));
}

namespace {

SpherePoint finite_or_infinity(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
  return w;
}

}  // namespace

SpherePoint RationalMap::operator()(const SpherePoint& p) const {
  const int dn = num_.degree();
  const int dd = den_.degree();
  if (p.is_infinity()) {
    if (dn > dd) return SpherePoint::infinity();
    if (dn < dd) return Complex(0.0, 0.0);
    return num_.leading() / den_.leading();
  }
  const Complex z = p.value();
  if (std::abs(z) <= 1.0) {
    const Complex d = den_(z);
    if (d == Complex(0.0, 0.0)) return SpherePoint::infinity();
    return finite_or_infinity(num_(z) / d);
  }
  // Outside the unit disk evaluate the reversed polynomials at w = 1/z.
  const Complex w = 1.0 / z;
  const Complex rd = den_.eval_reversed(w, std::max(dd, 0));
  if (rd == Complex(0.0, 0.0)) return SpherePoint::infinity();
  Complex ratio = num_.is_zero() ? Complex(0.0, 0.0) : num_.eval_reversed(w, dn) / rd;
  for (int k = 0; k < dn - dd; ++k) ratio *= z;
  for (int k = 0; k < dd - dn; ++k) ratio *= w;
  return finite_or_infinity(ratio);
}

Complex RationalMap::derivative(Complex z) const {
  const Complex d = den_(z);
  if (d == Complex(0.0, 0.0)) throw std::domain_error("RationalMap::derivative: pole");
  return (num_.derivative()(z) * d - num_(z) * den_.derivative()(z)) / (d * d);
}

SpherePoint eval_rational(const RationalMap& r, const SpherePoint& z) { return r(z); }

namespace {

// sum_k c_k N^k D^(d - k): the homogenised substitution P(N/D) D^d.
Polynomial substitute(const Polynomial& p, int d, const Polynomial& n, const Polynomial& den) {
  Polynomial acc;
  for (int k = 0; k <= d; ++k) {
    const Complex c = p.coeff(k);
    if (c == Complex(0.0, 0.0)) continue;
    Polynomial term = Polynomial::constant(c);
    for (int i = 0; i < k; ++i) term = term * n;
    for (int i = k; i < d; ++i) term = term * den;
    acc = acc + term;
  }
  return acc;
}

Polynomial reflect_coefficients(const Polynomial& p, int d) {
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1, 0.0);
  for (int k = 0; k <= p.degree(); ++k) c[static_cast<std::size_t>(d - k)] = std::conj(p.coeff(k));
  return Polynomial(std::move(c));
}

}  // namespace

RationalMap compose_rational(const RationalMap& outer, const RationalMap& inner) {
  // A common root of the two expanded polynomials would be a common root of the
  // inner numerator and denominator, so the composite is again in lowest terms.
  const int d = outer.degree();
  return RationalMap::from_reduced(substitute(outer.num(), d, inner.num(), inner.den()),
                                   substitute(outer.den(), d, inner.num(), inner.den()));
}

RationalMap reflect_rational(const RationalMap& r) {
  // 1/conj(P(1/conj z) / Q(1/conj z)) = Q~(z) / P~(z) with P~(z) = z^d conj(P(1/conj z)).
  const int d = r.degree();
  return RationalMap::from_reduced(reflect_coefficients(r.den(), d), reflect_coefficients(r.num(), d));
}

std::vector<CriticalPoint> critical_points(const RationalMap& r) {
  const int d = r.degree();
  if (d < 2) throw std::invalid_argument("critical_points: degree must be at least 2");
  const Polynomial w = r.num().derivative() * r.den() - r.num() * r.den().derivative();
  // The z^(2d-1) coefficients cancel in exact arithmetic; drop their rounding residue.
  std::vector<Complex> c = w.coeffs();
  if (c.size() > static_cast<std::size_t>(2 * d - 1)) c.resize(static_cast<std::size_t>(2 * d - 1));
  const Polynomial wronskian(std::move(c));

  std::vector<CriticalPoint> out;
  if (wronskian.degree() >= 1) {
    for (const Root& root : polynomial_roots(wronskian)) out.push_back({root.value, root.multiplicity});
  }
  const int at_infinity = 2 * d - 2 - std::max(wronskian.degree(), 0);
  if (at_infinity > 0) out.push_back({SpherePoint::infinity(), at_infinity});
  return out;
}

bool preserves_unit_disk(const RationalMap& r) {
  const SpherePoint origin = r(Complex(0.0, 0.0));
  if (origin.is_infinity() || std::abs(origin.value()) >= 1.0) return false;
  constexpr int kSamples = 64;
  for (int k = 0; k < kSamples; ++k) {
    const SpherePoint w = r(std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / kSamples));
    if (w.is_infinity() || std::abs(std::abs(w.value()) - 1.0) > 1e-10) return false;
  }
  return true;
}

BlaschkeProduct::BlaschkeProduct(double theta, std::vector<Complex> zeros)
    : theta_(theta), zeros_(std::move(zeros)) {
  if (!std::isfinite(theta)) throw std::invalid_argument("BlaschkeProduct: non-finite angle");
  if (zeros_.empty()) throw std::invalid_argument("BlaschkeProduct: at least one zero is required");
  for (const Complex& a : zeros_) {
    if (!(std::abs(a) < 1.0 - 1e-12)) {
      throw std::invalid_argument("BlaschkeProduct: zeros must lie in the open unit disk");
    }
  }
}

SpherePoint BlaschkeProduct::operator()(const SpherePoint& p) const {
  Complex acc = std::polar(1.0, theta_);
  bool infinite = false;
  for (const Complex& a : zeros_) {
    // A point cannot be both a zero (|a| < 1) and a pole (|1/conj a| > 1).
    if (p.is_infinity()) {
      if (a == Complex(0.0, 0.0)) {
        infinite = true;
      } else {
        acc *= -1.0 / std::conj(a);
      }
      continue;
    }
    const Complex z = p.value();
    const Complex den = 1.0 - std::conj(a) * z;
    if (den == Complex(0.0, 0.0)) {
      infinite = true;
    } else {
      acc *= (z - a) / den;
    }
  }
  if (infinite) return SpherePoint::infinity();
  return acc;
}

RationalMap blaschke_to_rational(const BlaschkeProduct& b) {
  Polynomial num = Polynomial::constant(std::polar(1.0, b.theta()));
  Polynomial den = Polynomial::constant(1.0);
  for (const Complex& a : b.zeros()) {
    num = num * Polynomial({-a, 1.0});
    den = den * Polynomial({1.0, -std::conj(a)});
  }
  // Zeros inside the disk, poles outside: lowest terms.
  return RationalMap::from_reduced(std::move(num), std::move(den));
}

bool is_power_conjugate(const BlaschkeProduct& b) {
  const int d = b.degree();
  if (d < 2) throw std::invalid_argument("is_power_conjugate: degree must be at least 2");
  std::vector<Complex> inside;
  for (const CriticalPoint& c : critical_points(blaschke_to_rational(b))) {
    if (c.point.is_infinity() || std::abs(c.point.value()) >= 1.0) continue;
    inside.insert(inside.end(), static_cast<std::size_t>(c.multiplicity), c.point.value());
  }
  if (static_cast<int>(inside.size()) != d - 1) return false;
  Complex centre = 0.0;
  for (const Complex& c : inside) centre += c;
  centre /= static_cast<double>(inside.size());
  return std::all_of(inside.begin(), inside.end(),
                     [&](const Complex& c) { return std::abs(c - centre) <= 1e-6; });
}

}  // namespace hyperext
