// Acceptance checks: one PASS/FAIL line per criterion.
// Run with --write-golden to regenerate tests/golden/figure1.txt.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hyperext/cli/io.hpp"
#include "hyperext/extensions.hpp"
#include "hyperext/julia3d.hpp"
#include "hyperext/linearizer.hpp"
#include "test_support.hpp"

namespace hyperext {
namespace {

using testing::gap;
using testing::rel_gap;
constexpr double kPi = std::numbers::pi;

// Running maximum of one measured error against its bound.
struct Check {
  std::string name;
  double bound;
  double worst = 0.0;

  void see(double err) {
    if (!(err <= worst)) worst = err;  // NaN sticks
  }
  bool ok() const { return worst <= bound; }
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

Outcome summarize(const std::vector<Check>& checks, std::string extra = {}) {
  Outcome out;
  for (const Check& c : checks) {
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += c.name + " " + fmt(c.worst) + (c.ok() ? " <= " : " > ") + fmt(c.bound);
    out.pass = out.pass && c.ok();
  }
  if (!extra.empty()) out.detail += "; " + extra;
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

HalfSpacePoint off_axis(Sampler& s) {
  return exp_hat({s.uniform(-2.0, 2.0), s.uniform(-kPi, kPi), s.uniform(0.0, 3.0)});
}

HalfSpacePoint mixed_point(Sampler& s) {
  switch (s.next() % 4) {
    case 0: return {0.0, 0.0, s.uniform(0.1, 3.0)};
    case 1: return {s.complex_in_box(2.0), 0.0};
    default: return testing::random_interior(s);
  }
}

BoundaryMap as_boundary(const RationalMap& r) {
  return [r](const SpherePoint& z) { return eval_rational(r, z); };
}

BallPoint random_ball(Sampler& s, double radius) {
  const double r = radius * std::cbrt(s.uniform());
  return BallPoint(s.unit_vector() * r);
}

Outcome star_algebra() {
  const auto start = std::chrono::steady_clock::now();
  Sampler s(1001);
  std::vector<Check> checks{{"norm-mult", 1e-12}, {"commute", 1e-10}, {"assoc", 1e-10}, {"unit", 1e-10},
                            {"inverse(boundary)", 1e-10}, {"inverse(interior)", 1e-10}};
  const HalfSpacePoint one(1.0, 0.0, 0.0);
  const MobiusTransform reciprocal = MobiusTransform::reciprocal();
  for (int k = 0; k < 100000; ++k) {
    const HalfSpacePoint a = mixed_point(s), b = mixed_point(s), c = mixed_point(s);
    const HalfSpacePoint ab = star_product(a, b);
    checks[0].see(std::abs(ab.norm() - a.norm() * b.norm()) / (a.norm() * b.norm()));
    checks[1].see(rel_gap(ab, star_product(b, a)));
    checks[2].see(rel_gap(star_product(ab, c), star_product(a, star_product(b, c))));
    checks[3].see(rel_gap(star_product(a, one), a));
    const HalfSpacePoint edge(s.complex_in_box(2.0), 0.0);
    checks[4].see(gap(star_product(edge, poincare_extend(reciprocal, edge)), one));
    const HalfSpacePoint inner = off_axis(s);
    checks[5].see(gap(star_product(inner, poincare_extend(reciprocal, inner)), one));
  }
  const double elapsed = seconds_since(start);
  Outcome out = summarize(checks, "runtime " + fmt(elapsed) + " s");
  out.pass = out.pass && elapsed <= 10.0;
  return out;
}

Outcome q_hat_routes() {
  Sampler s(1002);
  std::vector<Check> checks{{"closed~p*p", 1e-9}, {"closed~Exp-doubling", 1e-9}, {"axis", 1e-12},
                            {"dome", 1e-10}};
  bool axis_structure = true;
  for (int k = 0; k < 10000; ++k) {
    const HalfSpacePoint p = off_axis(s);
    const HalfSpacePoint q = q_hat(p);
    checks[0].see(rel_gap(q, star_product(p, p)));
    const ExpCoords c = exp_hat_inverse(p);
    checks[1].see(rel_gap(q, exp_hat({2 * c.x, 2 * c.y, 2 * c.t})));
    const double t = s.uniform(0.01, 5.0);
    const HalfSpacePoint axis = q_hat({0.0, 0.0, t});
    axis_structure = axis_structure && axis.x() == 0.0 && axis.y() == 0.0;
    checks[2].see(std::abs(axis.t() - t * t) / (t * t));
    const HalfSpacePoint r = testing::random_interior(s);
    const Vec3 v = r.vec() / r.vec().norm2();
    const HalfSpacePoint reflected(v.x, v.y, v.z);
    const Vec3 w = q_hat(r).vec() / q_hat(r).vec().norm2();
    checks[3].see(rel_gap(q_hat(reflected), HalfSpacePoint(w.x, w.y, w.z)));
  }
  Outcome out = summarize(checks, std::string("axis structure ") + (axis_structure ? "exact" : "broken"));
  out.pass = out.pass && axis_structure;
  return out;
}

Outcome boundary_consistency() {
  Sampler s(1003);
  const RationalMap general = testing::random_rational(s, 3);
  const BlaschkeProduct b(0.4, {Complex(0.3, -0.2), Complex(-0.5, 0.1), Complex(0.0, 0.6)});
  const RationalMap quad{Polynomial{Complex(-0.77, 0.12), 0.0, 1.0}, Polynomial{1.0}};
  const std::vector<std::pair<ExtensionMethod, RationalMap>> cases{{ExtensionMethod::product, general},
                                                                  {ExtensionMethod::radial, general},
                                                                  {ExtensionMethod::open_book, blaschke_to_rational(b)},
                                                                  {ExtensionMethod::star_square, quad}};
  std::vector<Check> checks;
  for (const auto& [method, r] : cases) {
    Check check{std::string(to_string(method)), 1e-9};
    const Extension e(method, r);
    for (int k = 0; k < 1000; ++k) {
      const Complex z = s.complex_in_box(2.0);
      const HalfSpacePoint out = e(HalfSpacePoint(z, 0.0));
      const SpherePoint w = eval_rational(r, z);
      if (w.is_infinity() || out.is_infinity()) {
        check.see(w.is_infinity() == out.is_infinity() ? 0.0 : 1.0);
        continue;
      }
      const double scale = std::max(1.0, std::abs(w.value()));
      check.see(std::max(std::abs(out.z() - w.value()), out.t()) / scale);
    }
    checks.push_back(check);
  }
  // t = 0 slice against the classical z^2 + c counts, integer equality.
  int mismatches = 0;
  const Complex c(-0.75, 0.0);
  const double radius = default_escape_radius(c);
  for (int j = 0; j < 256; ++j) {
    for (int i = 0; i < 256; ++i) {
      const Complex z(-2.0 + 4.0 * (i + 0.5) / 256, -2.0 + 4.0 * (j + 0.5) / 256);
      mismatches += escape_count(c, {z, 0.0}, 200, radius) != classical_escape_count(c, z, 200, radius);
    }
  }
  Outcome out = summarize(checks, "t=0 slice 256x256 mismatches " + std::to_string(mismatches));
  out.pass = out.pass && mismatches == 0;
  return out;
}

// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::vector<double> kFigureParameters{0.25, -0.75, -0.77, -1.0, -1.28};

std::string golden_line(double c, const std::string& pgm) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "c=%g bytes=%zu fnv1a=%016" PRIx64, c, pgm.size(), fnv1a(pgm));
  return buf;
}

SliceSpec figure_spec(double c, unsigned threads) {
  SliceSpec spec;
  spec.c = c;
  spec.threads = threads;
  return spec;
}

std::map<std::string, std::string> read_goldens(const std::string& path) {
  std::map<std::string, std::string> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    out[line.substr(0, line.find(' '))] = line;
  }
  return out;
}

Outcome figure_one(const std::string& golden_path) {
  const auto goldens = read_goldens(golden_path);
  Outcome out;
  double slowest = 0.0;
  for (double c : kFigureParameters) {
    const auto start = std::chrono::steady_clock::now();
    const EscapeGrid grid = render_slice(figure_spec(c, 1));
    slowest = std::max(slowest, seconds_since(start));
    const std::string pgm = cli::encode_pgm(grid);
    const bool stable = cli::encode_pgm(render_slice(figure_spec(c, 0))) == pgm;
    const std::string line = golden_line(c, pgm);
    const auto it = goldens.find(line.substr(0, line.find(' ')));
    const bool golden = it != goldens.end() && it->second == line;
    const double interior = slice_stats(grid).interior_fraction;
    out.pass = out.pass && stable && golden && interior > 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "c=%g interior %.4f%s%s; ", c, interior, golden ? "" : " GOLDEN MISMATCH",
                  stable ? "" : " UNSTABLE");
    out.detail += buf;
  }
  const EscapeGrid control = render_slice(figure_spec(0.0, 0));
  long disagree = 0;
  for (int j = 0; j < control.spec.height; ++j) {
    for (int i = 0; i < control.spec.width; ++i) {
      const double x = control.spec.x_at(i), t = control.spec.t_at(j);
      disagree += (control.at(i, j) == control.spec.max_iter) != (x * x + t * t <= 1.0);
    }
  }
  const double fraction = static_cast<double>(disagree) / static_cast<double>(control.counts.size());
  out.pass = out.pass && fraction <= 0.005 && slowest <= 10.0;
  out.detail += "c=0 half-disk disagreement " + fmt(fraction) + " <= 5.00e-03; slowest render " + fmt(slowest) + " s";
  return out;
}

Outcome mobius_suite() {
  Sampler s(1005);
  std::vector<Check> checks{{"homomorphism", 1e-9}, {"isometry", 1e-9}, {"tau-group", 1e-10}, {"binding", 1e-10},
                            {"tau-commute(disk)", 1e-9}, {"tau-swap(1/z side)", 1e-9}};
  const MobiusTransform reciprocal = MobiusTransform::reciprocal();
  for (int k = 0; k < 1000; ++k) {
    const MobiusTransform g = testing::random_mobius(s), h = testing::random_mobius(s);
    const HalfSpacePoint p = testing::random_interior(s), q = testing::random_interior(s);
    checks[0].see(rel_gap(poincare_extend(compose_mobius(g, h), p), poincare_extend(g, poincare_extend(h, p))));
    checks[1].see(std::abs(hyperbolic_distance(poincare_extend(g, p), poincare_extend(g, q)) -
                           hyperbolic_distance(p, q)));

    const double a = s.uniform(0.0, 1.0), b = s.uniform(0.0, 1.0), c = s.uniform(0.0, 1.0);
    const HalfSpacePoint on_page = tau_phi(a, {s.complex_in_disk(0.95), 0.0});
    checks[2].see(rel_gap(tau_phi(b, tau_phi(c, on_page)), tau_phi(b + c, on_page)));
    const HalfSpacePoint w(std::polar(1.0, s.uniform(-kPi, kPi)), 0.0);
    checks[3].see(gap(tau_phi(s.uniform(-kPi, kPi), w), w));

    // Circle-preserving maps either keep the disk (commute with tau_phi) or swap
    // it with its exterior (turn tau_phi into tau_-phi).
    const MobiusTransform d = testing::random_disk_automorphism(s);
    const double phi = s.uniform(0.0, 1.2);
    const HalfSpacePoint x = tau_phi(s.uniform(0.0, 1.2), {s.complex_in_disk(0.9), 0.0});
    checks[4].see(rel_gap(tau_phi(phi, poincare_extend(d, x)), poincare_extend(d, tau_phi(phi, x))));
    const MobiusTransform swap = compose_mobius(d, reciprocal);
    checks[5].see(rel_gap(tau_phi(-phi, poincare_extend(swap, x)), poincare_extend(swap, tau_phi(phi, x))));
  }
  return summarize(checks);
}

Outcome open_book_naturality() {
  Sampler s(1006);
  std::vector<Check> checks{{"naturality", 1e-8}, {"composition", 1e-9}};
  for (int k = 0; k < 100; ++k) {
    const BlaschkeProduct b(s.uniform(-kPi, kPi), testing::random_disk_points(s, 2 + k % 2));
    const MobiusTransform g = testing::random_disk_automorphism(s), h = testing::random_disk_automorphism(s);
    checks[0].see(naturality_deviation(ExtensionMethod::open_book, blaschke_to_rational(b), g, h, 20,
                                       static_cast<std::uint64_t>(k)));
    const BlaschkeProduct b2(s.uniform(-kPi, kPi), testing::random_disk_points(s, 2 + (k / 2) % 2));
    const RationalMap composite = compose_rational(blaschke_to_rational(b), blaschke_to_rational(b2));
    for (int j = 0; j < 10; ++j) {
      const HalfSpacePoint p{s.complex_in_box(1.5), s.uniform(0.05, 1.5)};
      checks[1].see(rel_gap(open_book_extension(composite, p), open_book_extension(b, open_book_extension(b2, p))));
    }
  }
  const Complex a(0.3, -0.4);
  const bool square = is_power_conjugate(BlaschkeProduct(0.0, {0.0, 0.0}));
  const bool shifted = is_power_conjugate(BlaschkeProduct(0.0, {a, a}));
  const bool generic = is_power_conjugate(BlaschkeProduct(0.0, {0.5, Complex(0.0, 0.3), 0.0}));
  Outcome out = summarize(checks, std::string("power-conjugate z^2 ") + (square ? "yes" : "no") +
                                      ", ((z-a)/(1-conj(a)z))^2 " + (shifted ? "yes" : "no") +
                                      ", generic cubic " + (generic ? "yes" : "no"));
  out.pass = out.pass && square && shifted && !generic;
  return out;
}

Outcome radial_suite() {
  Sampler s(1007);
  std::vector<Check> checks{{"norm", 1e-12}, {"iterate n<=4", 1e-10}};
  for (int k = 0; k < 100; ++k) {
    const RationalMap r = testing::random_rational(s, 2 + k % 2);
    const BoundaryMap f = as_boundary(r);
    for (int n = 1; n <= 4; ++n) {
      const BoundaryMap power = [&r, n](const SpherePoint& z) {
        SpherePoint w = z;
        for (int i = 0; i < n; ++i) w = eval_rational(r, w);
        return w;
      };
      const BallPoint v = random_ball(s, 0.95);
      BallPoint iterated = v;
      for (int i = 0; i < n; ++i) {
        iterated = radial_extension(f, iterated);
        checks[0].see(std::abs(iterated.norm() - v.norm()));
      }
      checks[1].see(gap(radial_extension(power, v).vec(), iterated.vec()));
    }
  }
  return summarize(checks);
}

Outcome barycentric_suite() {
  const auto start = std::chrono::steady_clock::now();
  Sampler s(1008);
  const auto quad = SphericalQuadrature::fibonacci(2048);
  std::vector<Check> checks{{"uniform", 1e-10}, {"Bar(nu_x)=x", 1e-8}, {"equivariance", 1e-6},
                            {"Mobius case", 1e-6}};
  checks[0].see(conformal_barycenter(quad.nodes).point.norm());
  auto visual_nodes = [&quad](const BallPoint& x) {
    std::vector<Vec3> out;
    for (const Vec3& n : quad.nodes) {
      const Vec3 m = ball_recenter(x.vec() * -1.0, n);
      out.push_back(m / m.norm());
    }
    return out;
  };
  for (int k = 0; k < 20; ++k) {
    const BallPoint x = random_ball(s, 0.9);
    std::vector<Vec3> nodes = visual_nodes(x);
    const BallPoint bar = conformal_barycenter(nodes).point;
    checks[1].see(gap(bar.vec(), x.vec()));
    const MobiusTransform g = testing::random_mobius(s);
    for (Vec3& n : nodes) n = ball_poincare_extend(g, BallPoint(n)).vec();
    checks[2].see(gap(conformal_barycenter(nodes).point.vec(), ball_poincare_extend(g, bar).vec()));
  }
  for (int k = 0; k < 100; ++k) {
    const MobiusTransform g = testing::random_mobius(s);
    const BallPoint x = random_ball(s, 0.8);
    const BallPoint out = conformal_natural_extension(as_boundary(RationalMap::from_mobius(g)), x, quad);
    checks[3].see(gap(out.vec(), ball_poincare_extend(g, x).vec()));
  }
  const double elapsed = seconds_since(start);
  Outcome out = summarize(checks, "runtime " + fmt(elapsed) + " s");
  out.pass = out.pass && elapsed <= 30.0;
  return out;
}

Outcome linearizer_suite() {
  std::vector<Check> checks{{"1/k! through 12", 1e-10}, {"functional equation", 1e-10}};
  const RationalMap square = RationalMap::from_polynomial(Polynomial({0.0, 0.0, 1.0}));
  const PowerSeries f = linearizer_series(square, 1.0, 12);
  double factorial = 1.0;
  for (int k = 0; k <= 12; ++k) {
    if (k > 0) factorial *= k;
    checks[0].see(std::abs(f.coeffs[static_cast<std::size_t>(k)] - 1.0 / factorial));
  }
  const RationalMap r = RationalMap::from_polynomial(Polynomial({-1.0, 0.0, 1.0}));
  const PowerSeries g = linearizer_series(r, (1.0 + std::sqrt(5.0)) / 2.0, 40);
  Sampler s(1009);
  for (int k = 0; k < 1000; ++k) {
    const Complex w = s.complex_in_disk(0.1);
    checks[1].see(std::abs(g(g.multiplier * w) - eval_rational(r, g(w)).value()));
  }
  return summarize(checks);
}

Outcome product_geometry() {
  Sampler s(1010);
  std::vector<Check> checks{{"geodesic->axis", 1e-10}, {"single factor", 1e-12}};
  bool above = true;
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMap r = testing::random_rational(s, 2 + trial % 2);
    const MobiusFactorization f = factor_rational(r);
    for (const MobiusFactor& factor : f.factors) {
      for (int k = 1; k <= 50; ++k) {
        const double u = k / 51.0;
        HalfSpacePoint p = HalfSpacePoint::infinity();
        if (factor.pole.is_infinity() || factor.zero.is_infinity()) {
          const SpherePoint& foot = factor.pole.is_infinity() ? factor.zero : factor.pole;
          p = HalfSpacePoint(foot.value(), std::tan(u * kPi / 2));
        } else {
          const Complex a = factor.zero.value(), b = factor.pole.value();
          const double radius = std::abs(a - b) / 2;
          const Complex centre = (a + b) / 2.0, dir = (a - b) / std::abs(a - b);
          p = HalfSpacePoint(centre + radius * std::cos(u * kPi) * dir, radius * std::sin(u * kPi));
        }
        const HalfSpacePoint image = product_extension(f, p);
        checks[0].see(std::abs(image.z()));
        above = above && image.t() > 0.0;
      }
    }
  }
  for (int k = 0; k < 1000; ++k) {
    const MobiusTransform g = testing::random_mobius(s);
    MobiusFactorization single;
    single.factors.push_back({g, SpherePoint(0.0), SpherePoint::infinity()});
    const HalfSpacePoint p = testing::random_interior(s);
    checks[1].see(rel_gap(product_extension(single, p), poincare_extend(g, p)));
  }
  Outcome out = summarize(checks, above ? "images interior" : "image left the interior");
  out.pass = out.pass && above;
  return out;
}

int write_goldens(const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  out << "# K(Q^_c) on y = 0, window [-1.5,1.5]x[0,1.5], 512x512, max_iter 200, PGM bytes\n";
  for (double c : kFigureParameters) out << golden_line(c, cli::encode_pgm(render_slice(figure_spec(c, 0)))) << "\n";
  std::printf("wrote %s\n", path.c_str());
  return out ? 0 : 1;
}

}  // namespace
}  // namespace hyperext

int main(int argc, char** argv) {
  using namespace hyperext;
  const std::string golden = std::string(HYPEREXT_GOLDEN_DIR) + "/figure1.txt";
  if (argc > 1 && std::strcmp(argv[1], "--write-golden") == 0) return write_goldens(golden);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"star-algebra", star_algebra},
      {"q-hat-routes", q_hat_routes},
      {"boundary-consistency", boundary_consistency},
      {"figure-1", [&golden] { return figure_one(golden); }},
      {"mobius-poincare", mobius_suite},
      {"open-book-naturality", open_book_naturality},
      {"radial", radial_suite},
      {"barycentric", barycentric_suite},
      {"linearizer", linearizer_suite},
      {"product-geometry", product_geometry},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += !out.pass;
    std::printf("%s %zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
