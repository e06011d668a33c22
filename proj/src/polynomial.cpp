#include "hyperext/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "hyperext/random.hpp"

namespace hyperext {

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0, 0.0)) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return Polynomial(std::move(c));
}

Complex Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Complex Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("Polynomial: the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Complex Polynomial::operator()(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex Polynomial::eval_reversed(Complex w, int d) const {
  Complex acc = 0.0;
  for (int k = 0; k <= d; ++k) acc = acc * w + coeff(k);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Complex> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(Complex z0) const {
  // Horner in the variable (z0 + u).
  std::vector<Complex> acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    std::vector<Complex> next(acc.size() + 1, 0.0);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k] += z0 * acc[k];
      next[k + 1] += acc[k];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return Polynomial(std::move(acc));
}

double Polynomial::norm1() const {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::abs(c);
  return s;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  // Drop leading coefficients that are only the rounding residue of a cancellation.
  while (!c.empty()) {
    const std::size_t k = c.size() - 1;
    const double scale = std::abs(a.coeff(static_cast<int>(k))) + std::abs(b.coeff(static_cast<int>(k)));
    if (std::abs(c[k]) > 8.0 * std::numeric_limits<double>::epsilon() * scale) break;
    c.pop_back();
  }
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + Complex(-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(Complex s, const Polynomial& a) {
  std::vector<Complex> c(a.coeffs_);
  for (Complex& x : c) x *= s;
  return Polynomial(std::move(c));
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// sum_k |c_k| |z|^k, the scale of the rounding error of Horner's rule at z.
double absolute_value_bound(const std::vector<Complex>& c, double r) {
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

std::vector<Complex> aberth(const std::vector<Complex>& c) {
  const std::size_t n = c.size() - 1;
  const Polynomial p(c);
  const Polynomial dp = p.derivative();
  if (n == 1) return {-c[0] / c[1]};

  const double radius = std::pow(std::abs(c[0] / c[n]), 1.0 / static_cast<double>(n));
  Sampler jitter(kRootSeed);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5 * jitter.uniform()) /
                             static_cast<double>(n) +
                         0.4;
    z[k] = std::polar(radius, angle);
  }

  const double tol = 4.0 * static_cast<double>(n) * kEps;
  for (int sweep = 0; sweep < 1000; ++sweep) {
    bool settled = true;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex value = p(z[k]);
      if (std::abs(value) <= tol * absolute_value_bound(c, std::abs(z[k]))) continue;
      const Complex slope = dp(z[k]);
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
      }
      Complex step;
      if (slope == Complex(0.0, 0.0)) {
        step = Complex(1e-3, 1e-3) * std::max(1.0, std::abs(z[k]));
      } else {
        const Complex ratio = value / slope;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      if (std::abs(step) > 1e-15 * std::abs(z[k])) settled = false;
    }
    if (settled) break;
  }
  return z;
}

}  // namespace

namespace {

// A root of multiplicity m is a simple root of P^(m-1); Newton there recovers the
// digits the cluster mean loses.
Complex polish_multiple_root(const Polynomial& p, Complex z, int multiplicity) {
  Polynomial q = p;
  for (int k = 1; k < multiplicity; ++k) q = q.derivative();
  const Polynomial dq = q.derivative();
  const double limit = 1e-6 * std::max(1.0, std::abs(z));
  Complex w = z;
  for (int iter = 0; iter < 8; ++iter) {
    const Complex slope = dq(w);
    if (slope == Complex(0.0, 0.0)) break;
    const Complex step = q(w) / slope;
    w -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(w))) break;
  }
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w - z) > limit) return z;
  return std::abs(p(w)) <= std::abs(p(z)) ? w : z;
}

}  // namespace

std::vector<Root> polynomial_roots(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("polynomial_roots: degree must be at least 1");
  const std::vector<Complex>& c = p.coeffs();

  std::size_t zero_roots = 0;
  while (c[zero_roots] == Complex(0.0, 0.0)) ++zero_roots;
  std::vector<Complex> raw(zero_roots, Complex(0.0, 0.0));
  if (c.size() - zero_roots > 1) {
    const std::vector<Complex> deflated(c.begin() + static_cast<std::ptrdiff_t>(zero_roots), c.end());
    const std::vector<Complex> found = aberth(deflated);
    raw.insert(raw.end(), found.begin(), found.end());
  }

  for (const Complex& r : raw) {
    const double scale = absolute_value_bound(c, std::max(1.0, std::abs(r)));
    if (!(std::abs(p(r)) <= 1e-10 * scale)) {
      throw RootFindingError("polynomial_roots: no convergence after 1000 sweeps", raw);
    }
  }

  // Single-linkage clustering of nearby roots.
  const std::size_t n = raw.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double radius = 1e-7 * std::max({1.0, std::abs(raw[i]), std::abs(raw[j])});
      if (std::abs(raw[i] - raw[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<Root> roots;
  std::vector<std::size_t> owner(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (owner[r] == n) {
      owner[r] = roots.size();
      roots.push_back({0.0, 0});
    }
    Root& root = roots[owner[r]];
    root.value += raw[i];
    ++root.multiplicity;
  }
  for (Root& r : roots) {
    r.value /= static_cast<double>(r.multiplicity);
    if (r.multiplicity > 1) r.value = polish_multiple_root(p, r.value, r.multiplicity);
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return roots;
}

std::vector<Complex> flatten_roots(std::span<const Root> roots) {
  std::vector<Complex> out;
  for (const Root& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

}  // namespace hyperext
