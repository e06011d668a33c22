#pragma once

#include <filesystem>
#include <string>

#include "hyperext/julia3d.hpp"

namespace hyperext::cli {

/// Binary PGM (P5): "P5\n<width> <height>\n255\n", then one byte per pixel, top row
/// first, byte = 255 - floor(255 * min(count, max_iter) / max_iter).
std::string encode_pgm(const EscapeGrid& grid);
/// Throws std::runtime_error when the file cannot be written.
void write_pgm(const EscapeGrid& grid, const std::filesystem::path& path);

/// "x,y,t,count" header, then one row per sample in storage order.
std::string encode_csv(const EscapeGrid& grid);
std::string encode_csv(const VolumeGrid& grid);
void write_text(const std::string& contents, const std::filesystem::path& path);

/// 15 significant digits, "-0" printed as "0", infinities as "inf"/"-inf".
std::string format_real(double x);

}  // namespace hyperext::cli
