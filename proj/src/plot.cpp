#include <array>
#include <fstream>
#include <sstream>

#include "qrup/experiments.hpp"

namespace qrup {

namespace {

constexpr double kWidth = 640.0, kHeight = 440.0;
constexpr double kLeft = 64.0, kRight = 500.0;   // plot area x range
constexpr double kTop = 40.0, kBottom = 390.0;   // plot area y range

constexpr std::array<const char*, 6> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

double map_x(double fraction) { return kLeft + fraction * (kRight - kLeft); }
double map_y(double rate) { return kBottom - rate * (kBottom - kTop); }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(1);
  s << std::fixed << v;
  return s.str();
}

}  // namespace

std::string render_success_curve_svg(const std::vector<SweepResult>& results) {
  if (results.empty())
    throw std::invalid_argument("plot: no sweep results");
  for (const SweepResult& r : results)
    if (r.rows.empty())
      throw std::invalid_argument("plot: sweep result has no rows");

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << (kLeft + kRight) / 2 << "\" y=\"22\" font-size=\"15\""
      << " text-anchor=\"middle\" font-family=\"sans-serif\">"
      << to_string(results.front().config.mode) << " success rate</text>\n";

  // grid and ticks at 0, 0.2, ..., 1 on both axes
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    svg << "  <line x1=\"" << map_x(v) << "\" y1=\"" << kTop << "\" x2=\""
        << map_x(v) << "\" y2=\"" << kBottom
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << kLeft << "\" y1=\"" << map_y(v) << "\" x2=\""
        << kRight << "\" y2=\"" << map_y(v)
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg << "  <text x=\"" << map_x(v) << "\" y=\"" << kBottom + 20
        << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"sans-serif\">"
        << fmt(v) << "</text>\n";
    svg << "  <text x=\"" << kLeft - 10 << "\" y=\"" << map_y(v) + 4
        << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"sans-serif\">"
        << fmt(v) << "</text>\n";
  }
  svg << "  <rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kRight - kLeft << "\" height=\"" << kBottom - kTop
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "  <text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kHeight - 12
      << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\">"
      << "(|T|+|&#937;|)/N</text>\n";
  svg << "  <text x=\"18\" y=\"" << (kTop + kBottom) / 2
      << "\" font-size=\"13\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " transform=\"rotate(-90 18 " << (kTop + kBottom) / 2
      << ")\">success rate</text>\n";

  for (size_t i = 0; i < results.size(); ++i) {
    const char* color = kPalette[i % kPalette.size()];
    svg << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (const SweepRow& row : results[i].rows)
      svg << map_x(row.fraction) << ',' << map_y(row.success_rate) << ' ';
    svg << "\"/>\n";
    const double ly = kTop + 18.0 + 20.0 * static_cast<double>(i);
    svg << "  <line x1=\"" << kRight + 14 << "\" y1=\"" << ly << "\" x2=\""
        << kRight + 44 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "  <text x=\"" << kRight + 50 << "\" y=\"" << ly + 4
        << "\" font-size=\"12\" font-family=\"sans-serif\">N="
        << results[i].config.n << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void plot_success_curve(const std::vector<SweepResult>& results,
                        const std::string& path) {
  const std::string svg = render_success_curve_svg(results);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open plot file", path);
  out << svg;
  out.flush();
  if (!out) throw IoError("write failed", path);
}

}  // namespace qrup
