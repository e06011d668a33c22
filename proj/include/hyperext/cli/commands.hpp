#pragma once

// Subcommands of the hyperext tool. Each validates its options before doing any
// work, writes its report to `out` and returns the process exit code. Invalid
// options and inadmissible maps surface as exceptions (std::invalid_argument and
// subclasses); numerical failures keep their own types.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hyperext::cli {

struct RenderOptions {
  std::optional<std::string> c;
  /// Alternative to `c`: a "quad:" specification.
  std::optional<std::string> map;
  std::string window = "-1.5,1.5,0,1.5";
  /// y range of a volume render; defaults to the x range of the window.
  std::optional<std::string> yrange;
  std::string plane = "y=0";
  std::string size = "512x512";
  int max_iter = 200;
  std::optional<double> escape_radius;
  std::string out;
  std::string format = "pgm";
  unsigned threads = 0;
};

struct EvalOptions {
  std::string method;
  std::string map;
  std::string point;
  /// Read and print the point in the ball model (ball-native methods only).
  bool ball = false;
  double lambda = 1.0;
  std::size_t nodes = 2048;
  std::uint64_t quadrature_seed = 0;
  std::optional<std::string> pairing;
};

struct CompareOptions {
  std::string methods;
  std::string map;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double lambda = 1.0;
  std::size_t nodes = 2048;
};

struct FactorOptions {
  std::string map;
  std::optional<std::string> pairing;
  std::optional<std::size_t> enumerate;
};

int cmd_render(const RenderOptions& options, std::ostream& out);
int cmd_eval(const EvalOptions& options, std::ostream& out);
int cmd_compare(const CompareOptions& options, std::ostream& out);
int cmd_factor(const FactorOptions& options, std::ostream& out);

/// "0,1,2" -> {0, 1, 2}.
std::vector<std::size_t> parse_index_list(const std::string& text);

}  // namespace hyperext::cli
