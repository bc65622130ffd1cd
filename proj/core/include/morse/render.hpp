#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "morse/dynamics.hpp"
#include "morse/farey.hpp"

namespace morse::render {

// 12 significant digits, shortest form, '.' separator, locale independent.
std::string format_number(double value);

// Writes content to a sibling temp file and renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Minimal CSV builder: comma separated, '\n' line endings, fields quoted only
// when they contain a comma, quote or newline.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header) { row(header); }

  CsvWriter& row(const std::vector<std::string>& fields);
  const std::string& str() const noexcept { return text_; }

 private:
  std::string text_;
};

using Rgb = std::array<std::uint8_t, 3>;

enum class Colormap { Grayscale, Viridis };

// Throws ConfigError for names other than "grayscale" and "viridis".
Colormap parse_colormap(std::string_view name);
Rgb colormap_lookup(Colormap map, double value01);

struct HeatmapStyle {
  std::int64_t width = 0;   // 0 keeps one pixel per grid column
  std::int64_t height = 0;  // 0 keeps one pixel per time row
  Colormap colormap = Colormap::Viridis;
};

struct Image {
  std::int64_t width = 0;
  std::int64_t height = 0;
  std::vector<Rgb> pixels;  // row-major, row 0 at the top
};

// Maps |psi| linearly to [0, 1] by the field maximum. Time row 0 (t_min) is
// the top image row and time increases downward; q increases to the right.
Image render_heatmap(const WavefieldGrid& field, const HeatmapStyle& style = {});

// Binary PPM (P6, maxval 255).
std::string encode_ppm(const Image& image);

struct FordDiagramOptions {
  std::int64_t max_depth = 7;
  double pixel_size = 800;  // rendered width and height
  bool show_vectors = true;
  bool show_thales = true;
};

// SVG 1.1 drawing of the unit square in user units (viewBox 0..1 plus a
// margin). Circles hang from the top edge, with radius attributes of exactly
// 1/(2 d^2); the 0/1 and 1/1 circles are clipped to the square.
std::string ford_svg(const FordDiagramOptions& options = {});

}  // namespace morse::render
