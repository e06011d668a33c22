#include "hyperext/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace hyperext {

SpherePoint MobiusFactorization::operator()(const SpherePoint& z) const {
  Complex acc = 1.0;
  bool has_zero = false;
  bool has_infinity = false;
  for (const MobiusFactor& f : factors) {
    const SpherePoint w = f.map(z);
    if (w.is_infinity()) {
      has_infinity = true;
    } else if (w.value() == Complex(0.0, 0.0)) {
      has_zero = true;
    } else {
      acc *= w.value();
    }
  }
  if (has_zero && has_infinity) throw std::domain_error("MobiusFactorization: product 0 * infinity");
  if (has_infinity) return SpherePoint::infinity();
  if (has_zero) return Complex(0.0, 0.0);
  return acc;
}

namespace {

// Zeros or poles sorted lexicographically, repeated by multiplicity, padded with
// infinity to the degree. cluster[i] identifies equal roots; -1 marks padding.
struct RootList {
  std::vector<SpherePoint> points;
  std::vector<int> cluster;
};

RootList root_list(const Polynomial& p, int degree) {
  RootList out;
  if (p.degree() >= 1) {
    const std::vector<Root> roots = polynomial_roots(p);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      for (int m = 0; m < roots[k].multiplicity; ++m) {
        out.points.emplace_back(roots[k].value);
        out.cluster.push_back(static_cast<int>(k));
      }
    }
  }
  while (static_cast<int>(out.points.size()) < degree) {
    out.points.push_back(SpherePoint::infinity());
    out.cluster.push_back(-1);
  }
  return out;
}

MobiusTransform factor_map(const SpherePoint& zero, const SpherePoint& pole, Complex scale) {
  if (zero.is_infinity() && pole.is_infinity()) {
    throw std::logic_error("factor_rational: a factor cannot pair infinity with infinity");
  }
  if (zero.is_infinity()) return {0.0, scale, 1.0, -pole.value()};
  if (pole.is_infinity()) return {scale, -scale * zero.value(), 0.0, 1.0};
  return {scale, -scale * zero.value(), 1.0, -pole.value()};
}

bool close(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() || b.is_infinity()) return chordal_distance(a, b) <= 1e-8;
  const Complex u = a.value();
  const Complex v = b.value();
  return std::abs(u - v) <= 1e-8 * std::max(std::abs(u), std::abs(v));
}

MobiusFactorization build(const RationalMap& r, const RootList& zeros, const RootList& poles,
                          const std::vector<std::size_t>& pole_index) {
  const Complex constant = r.num().leading() / r.den().leading();
  MobiusFactorization f;
  f.constant = constant;
  f.pairing.pole_index = pole_index;
  f.pairing.canonical = std::is_sorted(pole_index.begin(), pole_index.end());
  for (std::size_t i = 0; i < zeros.points.size(); ++i) {
    const SpherePoint& zero = zeros.points[i];
    const SpherePoint& pole = poles.points[pole_index[i]];
    f.factors.push_back({factor_map(zero, pole, i == 0 ? constant : Complex(1.0)), zero, pole});
  }

  for (int k = 0; k < 20; ++k) {
    const SpherePoint z = std::polar(0.3 + 0.11 * k, 0.7 + 2.4 * k);
    if (!close(r(z), f(z))) {
      throw std::logic_error("factor_rational: product of factors does not reproduce the map");
    }
  }
  return f;
}

}  // namespace

MobiusFactorization factor_rational(const RationalMap& r,
                                    const std::optional<std::vector<std::size_t>>& pairing) {
  const int degree = r.degree();
  const RootList zeros = root_list(r.num(), degree);
  const RootList poles = root_list(r.den(), degree);
  std::vector<std::size_t> index(static_cast<std::size_t>(degree));
  std::iota(index.begin(), index.end(), 0);
  if (pairing) {
    std::vector<std::size_t> sorted = *pairing;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != index) throw std::invalid_argument("factor_rational: pairing must be a permutation of 0..deg-1");
    index = *pairing;
  }
  return build(r, zeros, poles, index);
}

std::vector<MobiusFactorization> enumerate_pairings(const RationalMap& r, std::size_t limit) {
  if (limit == 0) throw std::invalid_argument("enumerate_pairings: limit must be at least 1");
  const int degree = r.degree();
  const RootList zeros = root_list(r.num(), degree);
  const RootList poles = root_list(r.den(), degree);
  std::vector<std::size_t> index(static_cast<std::size_t>(degree));
  std::iota(index.begin(), index.end(), 0);

  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<MobiusFactorization> out;
  do {
    std::vector<std::pair<int, int>> key;
    for (std::size_t i = 0; i < index.size(); ++i) key.emplace_back(zeros.cluster[i], poles.cluster[index[i]]);
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) {
      out.push_back(build(r, zeros, poles, index));
      if (out.size() == limit) break;
    }
  } while (std::next_permutation(index.begin(), index.end()));
  return out;
}

}  // namespace hyperext
