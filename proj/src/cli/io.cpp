#include "hyperext/cli/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hyperext::cli {

namespace {

unsigned char shade(int count, int max_iter) {
  const long clamped = std::min(count, max_iter);
  return static_cast<unsigned char>(255 - (255 * clamped) / max_iter);
}

void append_csv_row(std::string& out, double x, double y, double t, int count) {
  out += format_real(x);
  out += ',';
  out += format_real(y);
  out += ',';
  out += format_real(t);
  out += ',';
  out += std::to_string(count);
  out += '\n';
}

void write_bytes(const std::string& contents, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  file.close();
  if (!file) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace

std::string encode_pgm(const EscapeGrid& grid) {
  const SliceSpec& s = grid.spec;
  std::string out = "P5\n" + std::to_string(s.width) + " " + std::to_string(s.height) + "\n255\n";
  out.reserve(out.size() + grid.counts.size());
  for (int count : grid.counts) out += static_cast<char>(shade(count, s.max_iter));
  return out;
}

void write_pgm(const EscapeGrid& grid, const std::filesystem::path& path) { write_bytes(encode_pgm(grid), path); }

std::string encode_csv(const EscapeGrid& grid) {
  const SliceSpec& s = grid.spec;
  std::string out = "x,y,t,count\n";
  for (int j = 0; j < s.height; ++j) {
    for (int i = 0; i < s.width; ++i) append_csv_row(out, s.x_at(i), s.plane_y, s.t_at(j), grid.at(i, j));
  }
  return out;
}

std::string encode_csv(const VolumeGrid& grid) {
  const VolumeSpec& s = grid.spec;
  std::string out = "x,y,t,count\n";
  for (int k = 0; k < s.ny; ++k) {
    for (int j = 0; j < s.nt; ++j) {
      for (int i = 0; i < s.nx; ++i) append_csv_row(out, s.x_at(i), s.y_at(k), s.t_at(j), grid.at(i, j, k));
    }
  }
  return out;
}

void write_text(const std::string& contents, const std::filesystem::path& path) { write_bytes(contents, path); }

std::string format_real(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace hyperext::cli
