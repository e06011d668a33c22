#include "hyperext/linearizer.hpp"

#include <stdexcept>

namespace hyperext {

Complex PowerSeries::operator()(Complex w) const {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
  return acc;
}

namespace {

using Series = std::vector<Complex>;

Series truncated_product(const Series& a, const Series& b, std::size_t n) {
  Series c(n + 1, 0.0);
  for (std::size_t i = 0; i < a.size() && i <= n; ++i) {
    for (std::size_t j = 0; j < b.size() && i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// a / b truncated at u^n; b[0] != 0.
Series truncated_quotient(const Series& a, const Series& b, std::size_t n) {
  Series q(n + 1, 0.0);
  for (std::size_t k = 0; k <= n; ++k) {
    Complex acc = k < a.size() ? a[k] : Complex(0.0);
    for (std::size_t j = 1; j <= k && j < b.size(); ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

Series padded(const Polynomial& p, std::size_t n) {
  Series s(p.coeffs().begin(), p.coeffs().end());
  s.resize(std::max(s.size(), n + 1), 0.0);
  return s;
}

}  // namespace

PowerSeries linearizer_series(const RationalMap& r, const SpherePoint& z0, int order) {
  if (order < 1) throw std::invalid_argument("linearizer_series: order must be at least 1");
  if (z0.is_infinity()) throw std::invalid_argument("linearizer_series: base point must be finite");
  const Complex base = z0.value();
  const SpherePoint image = r(z0);
  if (image.is_infinity() || std::abs(image.value() - base) > 1e-10 * std::max(1.0, std::abs(base))) {
    throw std::invalid_argument("linearizer_series: base point is not a fixed point");
  }
  const Complex lambda = r.derivative(base);
  if (!(std::abs(lambda) > 1.0 + 1e-9)) {
    throw std::invalid_argument("linearizer_series: fixed point is not repelling");
  }

  const auto n = static_cast<std::size_t>(order);
  // Taylor coefficients of u -> R(base + u).
  const Series taylor = truncated_quotient(padded(r.num().shifted(base), n), padded(r.den().shifted(base), n), n);

  // With u(w) = f(w) - base, matching w^k in f(lambda w) = R(base + u(w)) gives
  // (lambda^k - lambda) c_k = [w^k] sum_{j>=2} taylor_j u^j, which only involves c_1..c_{k-1}.
  Series u(n + 1, 0.0);
  u[1] = 1.0;
  Complex lambda_power = lambda;
  for (std::size_t k = 2; k <= n; ++k) {
    lambda_power *= lambda;
    Complex rhs = 0.0;
    Series power = u;
    for (std::size_t j = 2; j <= k; ++j) {
      power = truncated_product(power, u, k);
      rhs += taylor[j] * power[k];
    }
    u[k] = rhs / (lambda_power - lambda);
  }

  PowerSeries out{base, lambda, u};
  out.coeffs[0] = base;
  return out;
}

}  // namespace hyperext
