#include "hyperext/extensions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hyperext/random.hpp"

namespace hyperext {

SphericalQuadrature SphericalQuadrature::fibonacci(std::size_t count, std::uint64_t seed) {
  if (count == 0 || count % 8 != 0) {
    throw std::invalid_argument("SphericalQuadrature: node count must be a positive multiple of 8");
  }
  constexpr double kQuarter = std::numbers::pi / 2.0;
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  const double offset = seed == 0 ? 0.0 : Sampler(seed).uniform(0.0, kQuarter);
  const std::size_t base = count / 8;

  SphericalQuadrature q;
  q.rule = "fibonacci-octant";
  q.seed = seed;
  q.nodes.reserve(count);
  for (std::size_t i = 0; i < base; ++i) {
    const double z = 1.0 - (static_cast<double>(i) + 0.5) / static_cast<double>(base);
    const double r = std::sqrt(1.0 - z * z);
    const double azimuth = offset + std::fmod(static_cast<double>(i) * golden_angle, kQuarter);
    const double x = r * std::cos(azimuth);
    const double y = r * std::sin(azimuth);
    // Quarter turns are coordinate swaps, so the symmetry is exact in floating point.
    const std::array<Vec3, 4> turns{Vec3{x, y, z}, Vec3{-y, x, z}, Vec3{-x, -y, z}, Vec3{y, -x, z}};
    for (const Vec3& v : turns) q.nodes.push_back(v);
    for (const Vec3& v : turns) q.nodes.push_back(-v);
  }
  return q;
}

SphericalQuadrature SphericalQuadrature::from_nodes(std::vector<Vec3> nodes) {
  if (nodes.empty()) throw std::invalid_argument("SphericalQuadrature: no nodes");
  for (const Vec3& v : nodes) {
    if (std::abs(v.norm() - 1.0) > 1e-12) throw std::invalid_argument("SphericalQuadrature: nodes must be unit vectors");
  }
  SphericalQuadrature q;
  q.nodes = std::move(nodes);
  q.rule = "explicit";
  return q;
}

BallPoint radial_extension(const BoundaryMap& r, const BallPoint& v) {
  const double n = v.norm();
  if (n == 0.0) return v;
  const Vec3 image = stereographic_lift(r(stereographic_project(v.vec() / n)));
  return BallPoint(n * image);
}

HalfSpacePoint open_book_extension(const BoundaryMap& disk_map, const HalfSpacePoint& p) {
  if (p.is_infinity()) {
    return tau_phi(std::numbers::pi, HalfSpacePoint::boundary(disk_map(Complex(0.0, 0.0))));
  }
  const OpenBookCoords page = page_decompose(p);
  return tau_phi(page.phi, HalfSpacePoint::boundary(disk_map(page.z)));
}

HalfSpacePoint open_book_extension(const BlaschkeProduct& b, const HalfSpacePoint& p) {
  return open_book_extension(BoundaryMap(std::cref(b)), p);
}

HalfSpacePoint open_book_extension(const RationalMap& r, const HalfSpacePoint& p) {
  if (!preserves_unit_disk(r)) {
    throw InadmissibleMap("open_book_extension: the map does not preserve the unit disk");
  }
  return open_book_extension(BoundaryMap(std::cref(r)), p);
}

namespace {

std::vector<Vec3> visual_nodes(const BoundaryMap& r, const BallPoint& x, const SphericalQuadrature& quad) {
  const Vec3 back = -x.vec();
  std::vector<Vec3> pushed;
  pushed.reserve(quad.size());
  for (const Vec3& node : quad.nodes) {
    Vec3 xi = ball_recenter(back, node);
    xi = xi / xi.norm();
    pushed.push_back(stereographic_lift(r(stereographic_project(xi))));
  }
  return pushed;
}

Vec3 mean(std::span<const Vec3> v) {
  Vec3 acc;
  for (const Vec3& x : v) acc = acc + x;
  return acc / static_cast<double>(v.size());
}

Vec3 recentred_mean(const Vec3& w, std::span<const Vec3> nodes) {
  Vec3 acc;
  for (const Vec3& x : nodes) acc = acc + ball_recenter(w, x);
  return acc / static_cast<double>(nodes.size());
}

}  // namespace

BallPoint visual_extension(const BoundaryMap& r, const BallPoint& x, const SphericalQuadrature& quad) {
  if (x.is_boundary()) throw std::invalid_argument("visual_extension: x must be interior");
  return BallPoint(mean(visual_nodes(r, x, quad)));
}

BarycenterResult conformal_barycenter(std::span<const Vec3> nodes) {
  if (nodes.empty()) throw std::invalid_argument("conformal_barycenter: empty measure");
  constexpr double kTolerance = 1e-10;
  constexpr int kMaxIterations = 200;

  Vec3 w;
  Vec3 m = recentred_mean(w, nodes);
  double residual = m.norm();
  double eta = 1.0;
  int iterations = 0;
  while (residual > kTolerance) {
    if (iterations == kMaxIterations) {
      throw BarycenterError("conformal_barycenter: no convergence in 200 iterations", residual);
    }
    ++iterations;
    const Vec3 candidate = ball_recenter(-w, eta * m);
    const Vec3 next = recentred_mean(candidate, nodes);
    if (next.norm() < residual) {
      w = candidate;
      m = next;
      residual = next.norm();
      eta = 1.0;
    } else {
      eta *= 0.5;
    }
  }
  return {BallPoint(w), residual, iterations};
}

BallPoint conformal_natural_extension(const BoundaryMap& r, const BallPoint& x, const SphericalQuadrature& quad) {
  if (x.is_boundary()) throw std::invalid_argument("conformal_natural_extension: x must be interior");
  return conformal_barycenter(visual_nodes(r, x, quad)).point;
}

std::string_view to_string(ExtensionMethod m) {
  switch (m) {
    case ExtensionMethod::product: return "product";
    case ExtensionMethod::radial: return "radial";
    case ExtensionMethod::open_book: return "open-book";
    case ExtensionMethod::star_square: return "star-square";
    case ExtensionMethod::visual: return "visual";
    case ExtensionMethod::conformal_natural: return "conformal-natural";
    case ExtensionMethod::vertical: return "vertical";
  }
  return "unknown";
}

std::optional<ExtensionMethod> parse_extension_method(std::string_view name) {
  for (const ExtensionMethod m :
       {ExtensionMethod::product, ExtensionMethod::radial, ExtensionMethod::open_book, ExtensionMethod::star_square,
        ExtensionMethod::visual, ExtensionMethod::conformal_natural, ExtensionMethod::vertical}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool is_ball_native(ExtensionMethod m) {
  return m == ExtensionMethod::radial || m == ExtensionMethod::visual || m == ExtensionMethod::conformal_natural;
}

namespace {

// c when r is exactly of the form z^2 + c (tolerance 1e-12 on the other coefficients).
std::optional<Complex> monic_quadratic_constant(const RationalMap& r) {
  if (r.den().degree() != 0 || r.num().degree() != 2) return std::nullopt;
  const Complex scale = r.den().coeff(0);
  const Complex lead = r.num().coeff(2) / scale;
  const Complex linear = r.num().coeff(1) / scale;
  if (std::abs(lead - 1.0) > 1e-12 || std::abs(linear) > 1e-12) return std::nullopt;
  return r.num().coeff(0) / scale;
}

}  // namespace

Extension::Extension(ExtensionMethod method, const RationalMap& r, const ExtensionOptions& options)
    : method_(method),
      map_(std::make_shared<const RationalMap>(r)),
      vertical_scale_(options.vertical_scale) {
  switch (method) {
    case ExtensionMethod::product:
      factorization_ = factor_rational(r, options.pairing);
      break;
    case ExtensionMethod::star_square: {
      const auto c = monic_quadratic_constant(r);
      if (!c) throw InadmissibleMap("star-square extension needs a map of the form z^2 + c");
      quadratic_c_ = *c;
      break;
    }
    case ExtensionMethod::open_book:
      if (!preserves_unit_disk(r)) throw InadmissibleMap("open-book extension needs a map preserving the unit disk");
      break;
    case ExtensionMethod::vertical:
      if (!(options.vertical_scale > 0.0)) throw std::invalid_argument("vertical extension needs a positive scale");
      break;
    case ExtensionMethod::radial:
    case ExtensionMethod::visual:
    case ExtensionMethod::conformal_natural:
      reflected_ = std::make_shared<const RationalMap>(reflect_rational(r));
      if (method != ExtensionMethod::radial) {
        quadrature_ = std::make_shared<const SphericalQuadrature>(
            SphericalQuadrature::fibonacci(options.quadrature_nodes, options.quadrature_seed));
      }
      break;
  }
}

BallPoint Extension::apply_ball(const BoundaryMap& boundary, const BallPoint& v) const {
  switch (method_) {
    case ExtensionMethod::radial: return radial_extension(boundary, v);
    case ExtensionMethod::visual: return visual_extension(boundary, v, *quadrature_);
    case ExtensionMethod::conformal_natural: return conformal_natural_extension(boundary, v, *quadrature_);
    default: throw std::logic_error("Extension: method does not live in the ball model");
  }
}

BallPoint Extension::operator()(const BallPoint& v) const {
  return apply_ball(BoundaryMap(std::cref(*map_)), v);
}

HalfSpacePoint Extension::operator()(const HalfSpacePoint& p) const {
  switch (method_) {
    case ExtensionMethod::product: return product_extension(*factorization_, p);
    case ExtensionMethod::star_square: return q_hat_c(quadratic_c_, p);
    case ExtensionMethod::open_book: return open_book_extension(BoundaryMap(std::cref(*map_)), p);
    case ExtensionMethod::vertical: return vertical_extension(BoundaryMap(std::cref(*map_)), vertical_scale_, p);
    case ExtensionMethod::radial:
    case ExtensionMethod::visual:
    case ExtensionMethod::conformal_natural:
      // The quadrature methods are defined as R itself on the sphere.
      if (method_ != ExtensionMethod::radial && p.is_boundary()) {
        return HalfSpacePoint::boundary((*map_)(p.to_sphere()));
      }
      return to_half_space(apply_ball(BoundaryMap(std::cref(*reflected_)), to_ball(p)));
  }
  throw std::logic_error("Extension: unknown method");
}

std::vector<HalfSpacePoint> sample_interior_points(std::size_t count, std::uint64_t seed) {
  Sampler sampler(seed);
  std::vector<HalfSpacePoint> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double x = sampler.uniform(-1.5, 1.5);
    const double y = sampler.uniform(-1.5, 1.5);
    out.emplace_back(x, y, sampler.uniform(0.05, 1.5));
  }
  return out;
}

namespace {

double separation(const HalfSpacePoint& a, const HalfSpacePoint& b) {
  if (a.is_interior() && b.is_interior()) return hyperbolic_distance(a, b);
  if (a == b) return 0.0;
  return std::numeric_limits<double>::infinity();
}

}  // namespace

double naturality_deviation(ExtensionMethod method, const RationalMap& r, const MobiusTransform& g,
                            const MobiusTransform& h, std::size_t samples, std::uint64_t seed,
                            const ExtensionOptions& options) {
  const RationalMap composite =
      compose_rational(RationalMap::from_mobius(g), compose_rational(r, RationalMap::from_mobius(h)));
  ExtensionOptions composite_options = options;
  composite_options.pairing.reset();
  const Extension outer(method, composite, composite_options);
  const Extension inner(method, r, options);
  double worst = 0.0;
  for (const HalfSpacePoint& p : sample_interior_points(samples, seed)) {
    const HalfSpacePoint lhs = outer(p);
    const HalfSpacePoint rhs = poincare_extend(g, inner(poincare_extend(h, p)));
    worst = std::max(worst, separation(lhs, rhs));
  }
  return worst;
}

DistanceStats compare_extensions(const Extension& a, const Extension& b, std::size_t samples, std::uint64_t seed) {
  DistanceStats stats;
  double total = 0.0;
  for (const HalfSpacePoint& p : sample_interior_points(samples, seed)) {
    const double d = separation(a(p), b(p));
    stats.max = std::max(stats.max, d);
    total += d;
    ++stats.samples;
  }
  stats.mean = stats.samples == 0 ? 0.0 : total / static_cast<double>(stats.samples);
  return stats;
}

HalfSpacePoint homotopy_interpolate(const HalfSpacePoint& a, const HalfSpacePoint& b, double lambda) {
  return geodesic_interpolate(a, b, lambda);
}

}  // namespace hyperext
