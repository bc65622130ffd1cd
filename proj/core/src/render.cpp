#include "morse/render.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "morse/errors.hpp"

namespace morse::render {

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  if (ec != std::errc{}) throw NumericError("format_number failed");
  return std::string(buf.data(), ptr);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

CsvWriter& CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) text_ += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      text_ += f;
      continue;
    }
    text_ += '"';
    for (char c : f) {
      if (c == '"') text_ += '"';
      text_ += c;
    }
    text_ += '"';
  }
  text_ += '\n';
  return *this;
}

Colormap parse_colormap(std::string_view name) {
  if (name == "grayscale") return Colormap::Grayscale;
  if (name == "viridis") return Colormap::Viridis;
  throw ConfigError("colormap", "unknown colormap '" + std::string(name) + "'");
}

Rgb colormap_lookup(Colormap map, double value01) {
  const double v = std::clamp(std::isfinite(value01) ? value01 : 0.0, 0.0, 1.0);
  if (map == Colormap::Grayscale) {
    const auto g = static_cast<std::uint8_t>(std::lround(v * 255.0));
    return {g, g, g};
  }
  // Viridis sampled at nine evenly spaced stops.
  static constexpr std::array<std::array<double, 3>, 9> kStops{{
      {68, 1, 84},
      {71, 44, 122},
      {59, 81, 139},
      {44, 113, 142},
      {33, 144, 141},
      {39, 173, 129},
      {92, 200, 99},
      {170, 220, 50},
      {253, 231, 37},
  }};
  const double pos = v * (kStops.size() - 1);
  const auto lo = std::min(static_cast<std::size_t>(pos), kStops.size() - 2);
  const double w = pos - static_cast<double>(lo);
  Rgb out{};
  for (int c = 0; c < 3; ++c) {
    out[c] = static_cast<std::uint8_t>(
        std::lround(kStops[lo][c] * (1.0 - w) + kStops[lo + 1][c] * w));
  }
  return out;
}

Image render_heatmap(const WavefieldGrid& field, const HeatmapStyle& style) {
  const auto cols = static_cast<std::int64_t>(field.cols());
  const auto rows = static_cast<std::int64_t>(field.rows());
  Image img;
  img.width = style.width > 0 ? style.width : cols;
  img.height = style.height > 0 ? style.height : rows;
  if (img.width <= 0 || img.height <= 0) throw ConfigError("heatmap", "empty image");

  const double peak = field.magnitude.empty()
                          ? 0.0
                          : *std::max_element(field.magnitude.begin(), field.magnitude.end());
  const double scale = peak > 0.0 ? 1.0 / peak : 0.0;
  // Quantize to 256 levels before the colour lookup so equal magnitudes map
  // to identical pixels.
  const auto level = [&](double m) { return std::lround(m * scale * 255.0) / 255.0; };

  img.pixels.resize(static_cast<std::size_t>(img.width * img.height));
  for (std::int64_t y = 0; y < img.height; ++y) {
    const std::int64_t j = y * rows / img.height;
    for (std::int64_t x = 0; x < img.width; ++x) {
      const std::int64_t i = x * cols / img.width;
      const double m = field.magnitude[static_cast<std::size_t>(j * cols + i)];
      img.pixels[static_cast<std::size_t>(y * img.width + x)] =
          colormap_lookup(style.colormap, level(m));
    }
  }
  return img;
}

std::string encode_ppm(const Image& image) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.reserve(out.size() + image.pixels.size() * 3);
  for (const Rgb& p : image.pixels) {
    out.push_back(static_cast<char>(p[0]));
    out.push_back(static_cast<char>(p[1]));
    out.push_back(static_cast<char>(p[2]));
  }
  return out;
}

namespace {

// SVG user space: x unchanged, y measured down from the top line y = 1.
std::string sx(double x) { return format_number(x); }
std::string sy(double y) { return format_number(1.0 - y); }

std::string line(farey::Point a, farey::Point b, std::string_view cls) {
  return "<line class=\"" + std::string(cls) + "\" x1=\"" + sx(a.x) + "\" y1=\"" + sy(a.y) +
         "\" x2=\"" + sx(b.x) + "\" y2=\"" + sy(b.y) + "\"/>\n";
}

}  // namespace

std::string ford_svg(const FordDiagramOptions& options) {
  using namespace farey;
  const std::vector<Fraction> fractions = farey_sequence(options.max_depth);
  const std::string px = format_number(options.pixel_size);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px
      << "\" height=\"" << px << "\" viewBox=\"-0.05 -0.05 1.1 1.1\">\n"
      << "<desc>Ford circles for Farey fractions of depth &lt;= " << options.max_depth
      << ". User units: x = value, y = 1 - height (circles hang from the top edge).</desc>\n"
      << "<style>circle{fill:none;stroke:#1f4e9c;stroke-width:0.002}"
      << ".vec{stroke:#c0392b;stroke-width:0.0015}"
      << ".rect{fill:none;stroke:#2e8b57;stroke-width:0.0012}"
      << ".pix{stroke:#2e8b57;stroke-width:0.0005}"
      << ".frame{fill:none;stroke:#000;stroke-width:0.002}</style>\n"
      << "<defs><clipPath id=\"unit\"><rect x=\"0\" y=\"0\" width=\"1\" height=\"1\"/>"
      << "</clipPath></defs>\n"
      << "<rect class=\"frame\" x=\"0\" y=\"0\" width=\"1\" height=\"1\"/>\n"
      << "<g id=\"circles\" clip-path=\"url(#unit)\">\n";
  for (const Fraction& f : fractions) {
    const FordCircle c = ford_circle(f);
    svg << "<circle data-fraction=\"" << f.str() << "\" cx=\"" << sx(c.center.x) << "\" cy=\""
        << sy(c.center.y) << "\" r=\"" << format_number(c.radius) << "\"/>\n";
  }
  svg << "</g>\n";

  if (options.show_vectors) {
    svg << "<g id=\"vectors\">\n";
    for (const Fraction& f : fractions) svg << line({0, 0}, {f.value(), 1.0}, "vec");
    svg << "</g>\n";
  }

  if (options.show_thales) {
    svg << "<g id=\"thales\">\n";
    for (const Fraction& f : fractions) {
      if (f.num() == 0 || f.num() == f.den()) continue;
      const ThalesRect r = thales_rect(f);
      svg << "<polygon class=\"rect\" data-fraction=\"" << f.str() << "\" data-pixels=\""
          << r.pixel_cols << "x" << r.pixel_rows << "\" points=\"";
      for (std::size_t k = 0; k < r.corners.size(); ++k) {
        svg << (k ? " " : "") << sx(r.corners[k].x) << "," << sy(r.corners[k].y);
      }
      svg << "\"/>\n";
      // Pixel lattice: den divisions along top->side, num along side->bottom.
      const Point t = r.corners[0], s = r.corners[1], o = r.corners[3];
      const Point e1{s.x - t.x, s.y - t.y};
      const Point e2{o.x - t.x, o.y - t.y};
      for (std::int64_t i = 1; i < r.pixel_rows; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(r.pixel_rows);
        const Point a{t.x + u * e1.x, t.y + u * e1.y};
        svg << line(a, {a.x + e2.x, a.y + e2.y}, "pix");
      }
      for (std::int64_t i = 1; i < r.pixel_cols; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(r.pixel_cols);
        const Point a{t.x + u * e2.x, t.y + u * e2.y};
        svg << line(a, {a.x + e1.x, a.y + e1.y}, "pix");
      }
    }
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace morse::render
