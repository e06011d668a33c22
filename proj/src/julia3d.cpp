#include "hyperext/julia3d.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace hyperext {

int escape_count(Complex c, const HalfSpacePoint& p, int max_iter, double escape_radius) {
  if (p.is_infinity()) return 0;
  const double cr = c.real();
  const double ci = c.imag();
  const double r2 = escape_radius * escape_radius;
  double x = p.x();
  double y = p.y();
  double t = p.t();
  for (int n = 0; n < max_iter; ++n) {
    const double s = x * x + y * y + t * t;
    if (s > r2) return n;
    if (s == 0.0) {
      x = cr;
      y = ci;
      continue;
    }
    // Same operations, in the same order, as q_hat followed by the translation.
    const double a = s / (s + t * t);
    const double nx = a * (x * x - y * y) + cr;
    const double ny = a * (2 * x * y) + ci;
    t = a * (2 * t * std::sqrt(s));
    x = nx;
    y = ny;
  }
  return max_iter;
}

int classical_escape_count(Complex c, Complex z, int max_iter, double escape_radius) {
  const double cr = c.real();
  const double ci = c.imag();
  const double r2 = escape_radius * escape_radius;
  double x = z.real();
  double y = z.imag();
  for (int n = 0; n < max_iter; ++n) {
    if (x * x + y * y > r2) return n;
    const double nx = x * x - y * y + cr;
    y = 2 * x * y + ci;
    x = nx;
  }
  return max_iter;
}

double default_escape_radius(Complex c) { return std::max(2.0, std::abs(c)); }

namespace {

void check_radius(Complex c, double radius, int max_iter) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (!std::isfinite(radius) || radius < default_escape_radius(c)) {
    throw std::invalid_argument("escape radius must be at least max(2, |c|)");
  }
}

void check_range(double lo, double hi, const char* what) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw std::invalid_argument(std::string("degenerate window in ") + what);
  }
}

double cell_centre(double lo, double hi, int count, int index) {
  const double step = (hi - lo) / count;
  const double mid = 0.5 * (lo + hi);
  return mid + ((index + 0.5) - 0.5 * count) * step;
}

// Runs body(row) for every row in [0, rows), rows claimed from a shared counter.
template <class Body>
void for_each_row(int rows, unsigned threads, const Body& body) {
  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(rows));
  std::atomic<int> next{0};
  auto run = [&] {
    for (int row = next++; row < rows; row = next++) body(row);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace

double SliceSpec::effective_escape_radius() const {
  return escape_radius > 0.0 ? escape_radius : default_escape_radius(c);
}

void SliceSpec::validate() const {
  check_range(window.xmin, window.xmax, "x");
  check_range(window.tmin, window.tmax, "t");
  if (window.tmin < 0.0) throw std::invalid_argument("window t-range must be non-negative");
  if (!std::isfinite(plane_y)) throw std::invalid_argument("plane y must be finite");
  if (width < 1 || height < 1) throw std::invalid_argument("image size must be positive");
  check_radius(c, effective_escape_radius(), max_iter);
}

double SliceSpec::x_at(int i) const { return cell_centre(window.xmin, window.xmax, width, i); }
double SliceSpec::t_at(int j) const { return cell_centre(window.tmin, window.tmax, height, height - 1 - j); }

EscapeGrid render_slice(const SliceSpec& spec) {
  spec.validate();
  EscapeGrid grid{spec, std::vector<int>(static_cast<std::size_t>(spec.width) * spec.height)};
  const double radius = spec.effective_escape_radius();
  for_each_row(spec.height, spec.threads, [&](int j) {
    const double t = spec.t_at(j);
    int* row = grid.counts.data() + static_cast<std::size_t>(j) * spec.width;
    for (int i = 0; i < spec.width; ++i) {
      row[i] = escape_count(spec.c, HalfSpacePoint(spec.x_at(i), spec.plane_y, t), spec.max_iter, radius);
    }
  });
  return grid;
}

double VolumeSpec::effective_escape_radius() const {
  return escape_radius > 0.0 ? escape_radius : default_escape_radius(c);
}

void VolumeSpec::validate() const {
  check_range(xmin, xmax, "x");
  check_range(ymin, ymax, "y");
  check_range(tmin, tmax, "t");
  if (tmin < 0.0) throw std::invalid_argument("window t-range must be non-negative");
  if (nx < 1 || ny < 1 || nt < 1) throw std::invalid_argument("volume size must be positive");
  check_radius(c, effective_escape_radius(), max_iter);
}

double VolumeSpec::x_at(int i) const { return cell_centre(xmin, xmax, nx, i); }
double VolumeSpec::y_at(int k) const { return cell_centre(ymin, ymax, ny, k); }
double VolumeSpec::t_at(int j) const { return cell_centre(tmin, tmax, nt, nt - 1 - j); }

VolumeGrid render_volume(const VolumeSpec& spec) {
  spec.validate();
  VolumeGrid grid{spec, std::vector<int>(static_cast<std::size_t>(spec.nx) * spec.ny * spec.nt)};
  const double radius = spec.effective_escape_radius();
  for_each_row(spec.ny * spec.nt, spec.threads, [&](int row) {
    const int k = row / spec.nt;
    const int j = row % spec.nt;
    const double y = spec.y_at(k);
    const double t = spec.t_at(j);
    int* out = grid.counts.data() + static_cast<std::size_t>(row) * spec.nx;
    for (int i = 0; i < spec.nx; ++i) {
      out[i] = escape_count(spec.c, HalfSpacePoint(spec.x_at(i), y, t), spec.max_iter, radius);
    }
  });
  return grid;
}

SliceStats slice_stats(const EscapeGrid& grid) {
  const SliceSpec& s = grid.spec;
  SliceStats stats;
  std::size_t interior = 0;
  std::size_t asymmetric = 0;
  for (int j = 0; j < s.height; ++j) {
    for (int i = 0; i < s.width; ++i) {
      const bool inside = grid.at(i, j) == s.max_iter;
      const bool mirror = grid.at(s.width - 1 - i, j) == s.max_iter;
      if (inside != mirror) ++asymmetric;
      if (!inside) continue;
      ++interior;
      const double x = s.x_at(i);
      const double t = s.t_at(j);
      if (!stats.has_interior) {
        stats.has_interior = true;
        stats.xmin = stats.xmax = x;
        stats.tmin = stats.tmax = t;
      } else {
        stats.xmin = std::min(stats.xmin, x);
        stats.xmax = std::max(stats.xmax, x);
        stats.tmin = std::min(stats.tmin, t);
        stats.tmax = std::max(stats.tmax, t);
      }
    }
  }
  const double total = static_cast<double>(grid.counts.size());
  stats.interior_fraction = static_cast<double>(interior) / total;
  stats.symmetry_residual = static_cast<double>(asymmetric) / total;
  return stats;
}

}  // namespace hyperext
