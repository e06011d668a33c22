#include "hyperext/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "hyperext/cli/io.hpp"
#include "hyperext/cli/map_spec.hpp"
#include "hyperext/extensions.hpp"
#include "hyperext/julia3d.hpp"

namespace hyperext::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) return parts;
    start = pos + 1;
  }
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("bad number '" + text + "' in " + what);
  }
  return value;
}

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("bad integer '" + text + "' in " + what);
  }
  return value;
}

std::vector<double> parse_reals(const std::string& text, std::size_t count, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != count) {
    throw std::invalid_argument(what + " expects " + std::to_string(count) + " comma-separated values, got '" +
                                text + "'");
  }
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(parse_real(p, what));
  return out;
}

ExtensionMethod parse_method(const std::string& name) {
  const auto m = parse_extension_method(name);
  if (!m) throw std::invalid_argument("unknown method '" + name + "'");
  return *m;
}

std::string format_point(const HalfSpacePoint& p) {
  if (p.is_infinity()) return "inf";
  return format_real(p.x()) + " " + format_real(p.y()) + " " + format_real(p.t());
}

std::string format_point(const BallPoint& p) {
  const Vec3& v = p.vec();
  return format_real(v.x) + " " + format_real(v.y) + " " + format_real(v.z);
}

std::string format_sphere(const SpherePoint& z) {
  if (z.is_infinity()) return "inf";
  const Complex w = z.value();
  if (w.imag() == 0.0) return format_real(w.real());
  const std::string im = format_real(std::abs(w.imag()));
  return format_real(w.real()) + (std::signbit(w.imag()) ? "-" : "+") + im + "i";
}

std::string format_pairing(const Pairing& p) {
  std::string out = p.canonical ? "canonical" : "explicit";
  out += ' ';
  for (std::size_t i = 0; i < p.pole_index.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(p.pole_index[i]);
  }
  return out;
}

void print_factorization(const MobiusFactorization& f, std::ostream& out) {
  out << "pairing=" << format_pairing(f.pairing) << '\n';
  for (const MobiusFactor& factor : f.factors) {
    const MobiusTransform& g = factor.map;
    out << format_sphere(g.a()) << ' ' << format_sphere(g.b()) << ' ' << format_sphere(g.c()) << ' '
        << format_sphere(g.d()) << " # zero=" << format_sphere(factor.zero) << " pole=" << format_sphere(factor.pole)
        << '\n';
  }
}

}  // namespace

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split(text, ',')) {
    const int v = parse_int(part, "index list");
    if (v < 0) throw std::invalid_argument("negative index '" + part + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

int cmd_render(const RenderOptions& options, std::ostream& out) {
  if (options.c.has_value() == options.map.has_value()) {
    throw std::invalid_argument("render needs exactly one of --c and --map");
  }
  Complex c;
  if (options.c) {
    c = parse_complex(*options.c);
  } else {
    const MapSpec spec = parse_map_spec(*options.map);
    if (spec.kind != MapSpec::Kind::quadratic) throw std::invalid_argument("render only supports quad: maps");
    c = spec.c;
  }
  const auto window = parse_reals(options.window, 4, "--window");
  if (options.plane.rfind("y=", 0) != 0) throw std::invalid_argument("--plane must look like y=<value>");
  const double plane_y = parse_real(options.plane.substr(2), "--plane");
  const auto dims = split(options.size, 'x');
  if (dims.size() != 2 && dims.size() != 3) throw std::invalid_argument("--size must be WxH or WxHxD");
  std::vector<int> size;
  for (const auto& d : dims) size.push_back(parse_int(d, "--size"));
  if (options.format != "pgm" && options.format != "csv") throw std::invalid_argument("--format must be pgm or csv");
  if (options.out.empty()) throw std::invalid_argument("--out is required");
  const double radius = options.escape_radius.value_or(0.0);
  if (options.escape_radius && !(radius > 0.0)) throw std::invalid_argument("--escape-radius must be positive");

  if (dims.size() == 2) {
    SliceSpec spec;
    spec.c = c;
    spec.plane_y = plane_y;
    spec.window = {window[0], window[1], window[2], window[3]};
    spec.width = size[0];
    spec.height = size[1];
    spec.max_iter = options.max_iter;
    spec.escape_radius = radius;
    spec.threads = options.threads;
    spec.validate();
    const EscapeGrid grid = render_slice(spec);
    if (options.format == "pgm") {
      write_pgm(grid, options.out);
    } else {
      write_text(encode_csv(grid), options.out);
    }
    const SliceStats stats = slice_stats(grid);
    out << "width=" << spec.width << '\n'
        << "height=" << spec.height << '\n'
        << "escape_radius=" << format_real(spec.effective_escape_radius()) << '\n'
        << "interior_fraction=" << format_real(stats.interior_fraction) << '\n'
        << "symmetry_residual=" << format_real(stats.symmetry_residual) << '\n';
    if (stats.has_interior) {
      out << "bbox=" << format_real(stats.xmin) << ',' << format_real(stats.xmax) << ',' << format_real(stats.tmin)
          << ',' << format_real(stats.tmax) << '\n';
    } else {
      out << "bbox=empty\n";
    }
    return 0;
  }

  if (options.format != "csv") throw std::invalid_argument("volume renders need --format csv");
  const auto yrange = options.yrange ? parse_reals(*options.yrange, 2, "--yrange")
                                     : std::vector<double>{window[0], window[1]};
  VolumeSpec spec;
  spec.c = c;
  spec.xmin = window[0];
  spec.xmax = window[1];
  spec.tmin = window[2];
  spec.tmax = window[3];
  spec.ymin = yrange[0];
  spec.ymax = yrange[1];
  spec.nx = size[0];
  spec.nt = size[1];
  spec.ny = size[2];
  spec.max_iter = options.max_iter;
  spec.escape_radius = radius;
  spec.threads = options.threads;
  spec.validate();
  const VolumeGrid grid = render_volume(spec);
  write_text(encode_csv(grid), options.out);
  std::size_t interior = 0;
  for (int count : grid.counts) interior += count == spec.max_iter ? 1 : 0;
  out << "nx=" << spec.nx << '\n'
      << "nt=" << spec.nt << '\n'
      << "ny=" << spec.ny << '\n'
      << "escape_radius=" << format_real(spec.effective_escape_radius()) << '\n'
      << "interior_fraction=" << format_real(static_cast<double>(interior) / static_cast<double>(grid.counts.size()))
      << '\n';
  return 0;
}

int cmd_eval(const EvalOptions& options, std::ostream& out) {
  const ExtensionMethod method = parse_method(options.method);
  const MapSpec spec = parse_map_spec(options.map);
  ExtensionOptions ext;
  ext.vertical_scale = options.lambda;
  ext.quadrature_nodes = options.nodes;
  ext.quadrature_seed = options.quadrature_seed;
  if (options.pairing) ext.pairing = parse_index_list(*options.pairing);

  if (options.ball) {
    if (!is_ball_native(method)) throw std::invalid_argument("--ball needs a ball-model method");
    const auto v = parse_reals(options.point, 3, "point");
    const BallPoint p(v[0], v[1], v[2]);
    const Extension extension(method, spec.to_rational(), ext);
    out << format_point(extension(p)) << '\n';
    return 0;
  }

  std::optional<HalfSpacePoint> p;
  if (options.point == "inf") {
    p = HalfSpacePoint::infinity();
  } else {
    const auto v = parse_reals(options.point, 3, "point");
    p = HalfSpacePoint(v[0], v[1], v[2]);
  }
  const Extension extension(method, spec.to_rational(), ext);
  out << format_point(extension(*p)) << '\n';
  return 0;
}

int cmd_compare(const CompareOptions& options, std::ostream& out) {
  const auto names = split(options.methods, ',');
  if (names.size() != 2) throw std::invalid_argument("--method expects two comma-separated methods");
  const ExtensionMethod first = parse_method(names[0]);
  const ExtensionMethod second = parse_method(names[1]);
  if (options.samples == 0) throw std::invalid_argument("--samples must be positive");
  const MapSpec spec = parse_map_spec(options.map);
  ExtensionOptions ext;
  ext.vertical_scale = options.lambda;
  ext.quadrature_nodes = options.nodes;
  const RationalMap r = spec.to_rational();
  const Extension a(first, r, ext);
  const Extension b(second, r, ext);
  const DistanceStats stats = compare_extensions(a, b, options.samples, options.seed);
  out << "samples=" << stats.samples << '\n'
      << "max_distance=" << format_real(stats.max) << '\n'
      << "mean_distance=" << format_real(stats.mean) << '\n';
  return 0;
}

int cmd_factor(const FactorOptions& options, std::ostream& out) {
  if (options.pairing && options.enumerate) throw std::invalid_argument("--pairing and --enumerate are exclusive");
  if (options.enumerate && *options.enumerate == 0) throw std::invalid_argument("--enumerate must be positive");
  const MapSpec spec = parse_map_spec(options.map);
  const RationalMap r = spec.to_rational();
  if (options.enumerate) {
    const auto all = enumerate_pairings(r, *options.enumerate);
    out << "pairings=" << all.size() << '\n';
    for (const auto& f : all) print_factorization(f, out);
    return 0;
  }
  std::optional<std::vector<std::size_t>> pairing;
  if (options.pairing) pairing = parse_index_list(*options.pairing);
  print_factorization(factor_rational(r, pairing), out);
  return 0;
}

}  // namespace hyperext::cli
