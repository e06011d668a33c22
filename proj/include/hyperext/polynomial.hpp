#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperext/geometry.hpp"

namespace hyperext {

/// Complex polynomial, coefficients in ascending degree. Trailing zeros are trimmed on
/// construction; sums also drop leading coefficients that cancel to rounding level.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs) : Polynomial(std::vector<Complex>(coeffs)) {}

  static Polynomial constant(Complex c) { return Polynomial({c}); }
  static Polynomial from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; the zero polynomial reports -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int k) const;
  Complex leading() const;

  Complex operator()(Complex z) const;
  /// sum_k c_k w^(d - k) for d >= degree: the polynomial w^d P(1/w).
  Complex eval_reversed(Complex w, int d) const;

  Polynomial derivative() const;
  /// Coefficients of u -> P(z0 + u).
  Polynomial shifted(Complex z0) const;
  /// sum |c_k|.
  double norm1() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Complex s, const Polynomial& a);

 private:
  std::vector<Complex> coeffs_;
};

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// Raised when the simultaneous iteration does not reach the residual bound.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(const std::string& what, std::vector<Complex> best_iterate)
      : std::runtime_error(what), best_iterate_(std::move(best_iterate)) {}
  const std::vector<Complex>& best_iterate() const { return best_iterate_; }

 private:
  std::vector<Complex> best_iterate_;
};

/// All roots of P (degree >= 1) by Aberth-Ehrlich simultaneous iteration.
///
/// Exact zero roots are deflated first. The starting points lie on a circle of radius
/// |c_0/c_n|^(1/n) with angular jitter drawn from a Sampler seeded with kRootSeed, so
/// the result is deterministic. Every returned root satisfies
/// |P(r)| <= 1e-10 * sum_k |c_k| max(1, |r|)^k. Roots closer than
/// 1e-7 * max(1, |r|) are merged into one entry carrying their multiplicity.
std::vector<Root> polynomial_roots(const Polynomial& p);

/// Roots repeated according to multiplicity.
std::vector<Complex> flatten_roots(std::span<const Root> roots);

inline constexpr std::uint64_t kRootSeed = 0x5eedf00dULL;

}  // namespace hyperext
