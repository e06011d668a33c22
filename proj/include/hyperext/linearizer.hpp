#pragma once

#include <vector>

#include "hyperext/rational.hpp"

namespace hyperext {

/// Truncated power series f(w) = sum c_k w^k of a linearizer at a repelling fixed point.
struct PowerSeries {
  Complex base;        ///< c_0, the fixed point
  Complex multiplier;  ///< lambda = R'(base)
  std::vector<Complex> coeffs;

  Complex operator()(Complex w) const;
};

/// Solves f(lambda w) = R(f(w)) order by order with c_0 = z0, c_1 = 1, up to w^order.
///
/// Requires R(z0) = z0 (to 1e-10, relative to max(1, |z0|)), z0 finite and
/// |lambda| > 1 + 1e-9; otherwise std::invalid_argument. Since |lambda| > 1 the
/// denominators lambda^k - lambda never vanish for k >= 2.
PowerSeries linearizer_series(const RationalMap& r, const SpherePoint& z0, int order);

}  // namespace hyperext
