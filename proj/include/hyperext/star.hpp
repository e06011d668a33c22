#pragma once

// The extended exponential Exp^ : (x, y, t) -> e^x (sech t cos y, sech t sin y, tanh t),
// the commutative star product it induces on the closed upper half-space, the
// quadratic family Q^_c = T_c o Q^, product extensions of rational maps and
// vertical extensions.

#include <functional>

#include "hyperext/factorization.hpp"
#include "hyperext/geometry.hpp"

namespace hyperext {

/// Logarithmic coordinates on the domain of Exp^. y is kept as given; values that
/// differ by 2*pi*k describe the same point.
struct ExpCoords {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  ExpCoords() = default;
  /// Throws std::invalid_argument for t < 0 or non-finite input.
  ExpCoords(double x_, double y_, double t_);

  friend ExpCoords operator+(const ExpCoords& a, const ExpCoords& b) {
    return {a.x + b.x, a.y + b.y, a.t + b.t};
  }
};

HalfSpacePoint exp_hat(const ExpCoords& c);

/// Principal logarithmic coordinates, y in (-pi, pi]. The closed vertical axis
/// (including the origin) and infinity have no preimage: std::domain_error.
ExpCoords exp_hat_inverse(const HalfSpacePoint& p);

/// a * b, the push-forward of addition through Exp^, extended to the axis by
/// (0,0,s) * b = (0,0, s |b|), to the boundary by complex multiplication and to
/// 0 and infinity by absorption. 0 * infinity throws std::domain_error.
///
/// Evaluated in the closed form
///   a * b = K (z_a z_b, w_a |b| + w_b |a|),  K = |a||b| / (|a||b| + w_a w_b),
/// which is the Exp^ route with the hyperbolic addition formulas applied.
HalfSpacePoint star_product(const HalfSpacePoint& a, const HalfSpacePoint& b);

/// Q^(p) = p * p. With s = |p|^2 and A = s/(s + t^2), returns
/// (A (x^2 - y^2), A (2xy), A (2t sqrt(s))). On t = 0 the factor A is exactly 1, so
/// boundary orbits are bit-identical to complex squaring.
HalfSpacePoint q_hat(const HalfSpacePoint& p);

/// T_c o Q^: Q^ followed by the horizontal translation by c.
HalfSpacePoint q_hat_c(Complex c, const HalfSpacePoint& p);

/// Star product of the Poincare extensions of the factors, folded left in stored order.
HalfSpacePoint product_extension(const MobiusFactorization& f, const HalfSpacePoint& p);

using BoundaryMap = std::function<SpherePoint(const SpherePoint&)>;

/// (z, t) -> (F(z), lambda t) for lambda > 0. Infinity maps to infinity when F fixes it.
HalfSpacePoint vertical_extension(const BoundaryMap& f, double lambda, const HalfSpacePoint& p);

}  // namespace hyperext
