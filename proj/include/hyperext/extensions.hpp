#pragma once

// Extensions of rational maps of the sphere to hyperbolic 3-space that are not
// built from the star product: radial (ball model), open book (Blaschke maps),
// visual and conformally natural barycentric extensions. Also a common dispatcher
// over every construction, naturality measurement and the geodesic homotopy.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperext/factorization.hpp"
#include "hyperext/star.hpp"

namespace hyperext {

/// Equal-weight nodes on the unit sphere.
struct SphericalQuadrature {
  std::vector<Vec3> nodes;
  std::string rule;
  std::uint64_t seed = 0;

  /// Spherical Fibonacci spiral over one octant-like sector (upper hemisphere, azimuth
  /// in [0, pi/2)), closed up under quarter turns about the vertical axis and the
  /// antipodal map. The node set is therefore invariant under z -> iz in the
  /// stereographic chart and has Euclidean mean zero. `count` must be a positive
  /// multiple of 8. A non-zero seed turns the spiral by a random azimuth.
  static SphericalQuadrature fibonacci(std::size_t count = 2048, std::uint64_t seed = 0);
  /// Arbitrary unit nodes (each checked to 1e-12).
  static SphericalQuadrature from_nodes(std::vector<Vec3> nodes);

  std::size_t size() const { return nodes.size(); }
  double weight() const { return 1.0 / static_cast<double>(nodes.size()); }
};

/// v -> |v| lift(R(project(v/|v|))), 0 -> 0.
BallPoint radial_extension(const BoundaryMap& r, const BallPoint& v);

/// p = tau_phi(z) with z in the closed disk  ->  tau_phi(f(z)). `disk_map` must send the
/// closed unit disk into itself and the circle to the circle; it is not checked here.
/// Infinity = tau_pi(0) goes to tau_pi(f(0)).
HalfSpacePoint open_book_extension(const BoundaryMap& disk_map, const HalfSpacePoint& p);
HalfSpacePoint open_book_extension(const BlaschkeProduct& b, const HalfSpacePoint& p);
/// Checks preserves_unit_disk first (std::invalid_argument otherwise).
HalfSpacePoint open_book_extension(const RationalMap& r, const HalfSpacePoint& p);

/// Euclidean mean of lift(R(xi)) over the visual measure of x, realised as the
/// nodes pushed by ball_recenter(-x, .).
BallPoint visual_extension(const BoundaryMap& r, const BallPoint& x, const SphericalQuadrature& quad);

struct BarycenterResult {
  BallPoint point;
  double residual = 0.0;  ///< |mean of the nodes recentred at point|
  int iterations = 0;
};

/// Thrown when the barycenter iteration stalls; carries the last residual.
class BarycenterError : public std::runtime_error {
 public:
  BarycenterError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// Point w at which the recentred nodes ball_recenter(w, .) have Euclidean mean 0.
/// Iterates w <- ball_recenter(-w, eta * mean) from w = 0 with eta = 1, halving eta
/// whenever the residual would grow; stops at residual <= 1e-10, at most 200 steps.
BarycenterResult conformal_barycenter(std::span<const Vec3> nodes);

/// Conformal barycenter of the R-pushed visual measure of x.
BallPoint conformal_natural_extension(const BoundaryMap& r, const BallPoint& x, const SphericalQuadrature& quad);

enum class ExtensionMethod { product, radial, open_book, star_square, visual, conformal_natural, vertical };

std::string_view to_string(ExtensionMethod m);
/// Accepts the names printed by to_string ("open-book", "star-square", ...).
std::optional<ExtensionMethod> parse_extension_method(std::string_view name);
/// Radial, visual and conformal-natural live in the ball model; the rest in the half-space.
bool is_ball_native(ExtensionMethod m);

struct ExtensionOptions {
  std::size_t quadrature_nodes = 2048;
  std::uint64_t quadrature_seed = 0;
  /// Height factor of the vertical extension.
  double vertical_scale = 1.0;
  /// Explicit zero/pole pairing for the product extension.
  std::optional<std::vector<std::size_t>> pairing;
};

/// Thrown when a map is outside the class a method accepts.
class InadmissibleMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An extension rule bound to one rational map.
///
/// Admissible inputs: open-book needs a map preserving the unit disk (a Blaschke
/// product); star-square needs z^2 + c; every other method takes any rational map.
/// The half-space call works for all methods: ball-native methods are carried over
/// by to_ball/to_half_space, extending kappa o R o kappa in the ball so that the
/// half-space boundary map is R itself.
class Extension {
 public:
  Extension(ExtensionMethod method, const RationalMap& r, const ExtensionOptions& options = {});

  ExtensionMethod method() const { return method_; }
  const RationalMap& map() const { return *map_; }

  HalfSpacePoint operator()(const HalfSpacePoint& p) const;
  /// Ball-native methods only (std::logic_error otherwise).
  BallPoint operator()(const BallPoint& v) const;

  /// Present for the product method.
  const std::optional<MobiusFactorization>& factorization() const { return factorization_; }

 private:
  BallPoint apply_ball(const BoundaryMap& boundary, const BallPoint& v) const;

  ExtensionMethod method_;
  std::shared_ptr<const RationalMap> map_;
  std::shared_ptr<const RationalMap> reflected_;
  std::shared_ptr<const SphericalQuadrature> quadrature_;
  std::optional<MobiusFactorization> factorization_;
  Complex quadratic_c_;
  double vertical_scale_ = 1.0;
};

/// Seeded interior sample points: x, y uniform in [-1.5, 1.5], t uniform in [0.05, 1.5].
std::vector<HalfSpacePoint> sample_interior_points(std::size_t count, std::uint64_t seed);

/// max over sampled p of d(Ext(g o R o h)(p), g^(Ext(R)(h^(p)))), hyperbolic distance in
/// the half-space. Throws InadmissibleMap if g o R o h leaves the method's class.
double naturality_deviation(ExtensionMethod method, const RationalMap& r, const MobiusTransform& g,
                            const MobiusTransform& h, std::size_t samples, std::uint64_t seed,
                            const ExtensionOptions& options = {});

struct DistanceStats {
  double max = 0.0;
  double mean = 0.0;
  std::size_t samples = 0;
};

/// Hyperbolic distance between two extensions of the same map over sampled points.
DistanceStats compare_extensions(const Extension& a, const Extension& b, std::size_t samples, std::uint64_t seed);

/// E_lambda(x): the point at fraction lambda along the geodesic from a to b.
HalfSpacePoint homotopy_interpolate(const HalfSpacePoint& a, const HalfSpacePoint& b, double lambda);

}  // namespace hyperext
