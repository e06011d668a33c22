#pragma once

// Escape-time rendering of the spatial filled Julia sets K(Q^_c): planar slices
// y = y0 of the closed upper half-space, 3D lattices, and the classical z^2 + c
// counts used as a boundary oracle.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hyperext/geometry.hpp"

namespace hyperext {

/// Number of Q^_c steps applied before |p| first exceeds `escape_radius`;
/// `max_iter` when the orbit stays inside.
int escape_count(Complex c, const HalfSpacePoint& p, int max_iter, double escape_radius);

/// The same count for z -> z^2 + c. On t = 0 both functions take identical
/// floating-point steps, so they return the same integers.
int classical_escape_count(Complex c, Complex z, int max_iter, double escape_radius);

/// max(2, |c|).
double default_escape_radius(Complex c);

struct Window {
  double xmin = -1.5;
  double xmax = 1.5;
  double tmin = 0.0;
  double tmax = 1.5;
};

struct SliceSpec {
  Complex c;
  double plane_y = 0.0;
  Window window;
  int width = 512;
  int height = 512;
  int max_iter = 200;
  /// 0 selects default_escape_radius(c).
  double escape_radius = 0.0;
  /// Worker threads; 0 uses the hardware concurrency. Does not affect the output.
  unsigned threads = 0;

  double effective_escape_radius() const;
  /// Throws std::invalid_argument on a degenerate window, tmin < 0, non-positive
  /// sizes, max_iter < 1 or an escape radius below max(2, |c|).
  void validate() const;
  /// Sample point of pixel (i, j): cell centres, row 0 at the top (largest t).
  double x_at(int i) const;
  double t_at(int j) const;
};

struct EscapeGrid {
  SliceSpec spec;
  /// Row-major, `spec.height` rows of `spec.width` counts.
  std::vector<int> counts;

  int at(int i, int j) const { return counts[static_cast<std::size_t>(j) * spec.width + i]; }
};

EscapeGrid render_slice(const SliceSpec& spec);

struct VolumeSpec {
  Complex c;
  double xmin = -1.5, xmax = 1.5;
  double ymin = -1.5, ymax = 1.5;
  double tmin = 0.0, tmax = 1.5;
  int nx = 64, ny = 64, nt = 32;
  int max_iter = 200;
  double escape_radius = 0.0;
  unsigned threads = 0;

  double effective_escape_radius() const;
  void validate() const;
  double x_at(int i) const;
  double y_at(int k) const;
  /// Layer 0 at the top (largest t), as in slices.
  double t_at(int j) const;
};

struct VolumeGrid {
  VolumeSpec spec;
  /// Index (k * nt + j) * nx + i for x index i, t index j, y index k.
  std::vector<int> counts;

  int at(int i, int j, int k) const {
    return counts[(static_cast<std::size_t>(k) * spec.nt + j) * spec.nx + i];
  }
};

VolumeGrid render_volume(const VolumeSpec& spec);

struct SliceStats {
  double interior_fraction = 0.0;
  /// Fraction of pixels whose interior/escaping class differs from their x-mirror.
  double symmetry_residual = 0.0;
  /// Bounding box of the interior pixels (sample coordinates); empty when none.
  bool has_interior = false;
  double xmin = 0.0, xmax = 0.0, tmin = 0.0, tmax = 0.0;
};

SliceStats slice_stats(const EscapeGrid& grid);

}  // namespace hyperext
