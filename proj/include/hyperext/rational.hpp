#pragma once

#include <vector>

#include "hyperext/mobius.hpp"
#include "hyperext/polynomial.hpp"

namespace hyperext {

/// num/den in lowest terms, degree max(deg num, deg den) >= 1.
class RationalMap {
 public:
  /// Throws std::invalid_argument for a zero denominator, a constant map, or when a
  /// root of num lies within 1e-9 of a root of den.
  RationalMap(Polynomial num, Polynomial den);

  /// Skips the common-root test; for callers that produce lowest terms by
  /// construction (composition of reduced maps, Blaschke products, Mobius maps).
  static RationalMap from_reduced(Polynomial num, Polynomial den);
  static RationalMap from_polynomial(Polynomial p) { return {std::move(p), Polynomial::constant(1.0)}; }
  static RationalMap from_mobius(const MobiusTransform& g);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  SpherePoint operator()(const SpherePoint& z) const;
  /// R'(z) at a finite point that is not a pole.
  Complex derivative(Complex z) const;

 private:
  struct Trusted {};
  RationalMap(Polynomial num, Polynomial den, Trusted);

  Polynomial num_;
  Polynomial den_;
};

SpherePoint eval_rational(const RationalMap& r, const SpherePoint& z);

/// outer o inner, expanded in coefficient form.
RationalMap compose_rational(const RationalMap& outer, const RationalMap& inner);
/// kappa o R o kappa with kappa(z) = 1/conj(z).
RationalMap reflect_rational(const RationalMap& r);

struct CriticalPoint {
  SpherePoint point;
  int multiplicity = 1;
};

/// Critical points with multiplicity (total 2d - 2): roots of num' den - num den',
/// plus infinity carrying the remaining multiplicity. Requires degree >= 2.
std::vector<CriticalPoint> critical_points(const RationalMap& r);

/// True when R maps the unit circle to itself and the unit disk into itself,
/// checked at 64 circle samples (tolerance 1e-10) and at 0.
bool preserves_unit_disk(const RationalMap& r);

/// e^{i theta} prod (z - a_k)/(1 - conj(a_k) z) with every |a_k| < 1 - 1e-12.
class BlaschkeProduct {
 public:
  BlaschkeProduct(double theta, std::vector<Complex> zeros);

  double theta() const { return theta_; }
  const std::vector<Complex>& zeros() const { return zeros_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  SpherePoint operator()(const SpherePoint& z) const;

 private:
  double theta_;
  std::vector<Complex> zeros_;
};

RationalMap blaschke_to_rational(const BlaschkeProduct& b);

/// Whether B = g1 o z^d o g2 for disk automorphisms g1, g2, i.e. B has a single
/// critical point in the disk, of multiplicity d - 1. Requires degree >= 2.
bool is_power_conjugate(const BlaschkeProduct& b);

}  // namespace hyperext
