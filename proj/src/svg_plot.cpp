#include "ncar/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ncar {

namespace {

const char* kPalette[] = {
    "#4269d0", "#efb118", "#ff725c", "#6cc5b0", "#3ca951", "#ff8ab7",
    "#a463f2", "#97bbf5", "#9c6b4e", "#9498a0", "#5c6068", "#c77f3f",
};
constexpr int kPaletteSize = 12;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_partition_svg(const DataSet& data, const RunResult& result,
                                 const PlotOptions& options) {
  if (data.dim != 2 && !options.project_first_two)
    throw DimensionError(
        "plot needs 2D data (got " + std::to_string(data.dim) +
        " features); pass the first-two-features projection flag to plot "
        "higher-dimensional results");
  if (data.n != static_cast<int>(result.assignments.size()))
    throw std::invalid_argument("render_partition_svg: result size mismatch");

  // data bounding box over the plotted axes, padded by 5% per side
  double min_x = data.at(0, 0), max_x = min_x;
  double min_y = data.at(0, 1), max_y = min_y;
  for (int i = 0; i < data.n; ++i) {
    min_x = std::min(min_x, data.at(i, 0));
    max_x = std::max(max_x, data.at(i, 0));
    min_y = std::min(min_y, data.at(i, 1));
    max_y = std::max(max_y, data.at(i, 1));
  }
  const double pad_x = std::max(0.05 * (max_x - min_x), 1e-9);
  const double pad_y = std::max(0.05 * (max_y - min_y), 1e-9);
  min_x -= pad_x;
  max_x += pad_x;
  min_y -= pad_y;
  max_y += pad_y;

  const double margin = 40.0;
  const double inner_w = options.width - 2 * margin;
  const double inner_h = options.height - 2 * margin;
  // uniform scale keeps circles circular
  const double scale =
      std::min(inner_w / (max_x - min_x), inner_h / (max_y - min_y));
  const double off_x =
      margin + 0.5 * (inner_w - scale * (max_x - min_x));
  const double off_y =
      margin + 0.5 * (inner_h - scale * (max_y - min_y));
  auto sx = [&](double x) { return off_x + (x - min_x) * scale; };
  auto sy = [&](double y) { return off_y + (max_y - y) * scale; };

  std::vector<char> is_target(data.n, 0);
  for (int t : result.targets)
    if (t >= 0 && t < data.n) is_target[t] = 1;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << options.width << "\" height=\"" << options.height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes frame and range labels
  svg << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin)
      << "\" width=\"" << fmt(inner_w) << "\" height=\"" << fmt(inner_h)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << fmt(margin) << "\" y=\""
      << fmt(options.height - margin + 16)
      << "\" font-size=\"11\" fill=\"#333\">" << fmt(min_x) << "</text>\n";
  svg << "<text x=\"" << fmt(options.width - margin - 30) << "\" y=\""
      << fmt(options.height - margin + 16)
      << "\" font-size=\"11\" fill=\"#333\">" << fmt(max_x) << "</text>\n";
  svg << "<text x=\"" << fmt(margin - 36) << "\" y=\""
      << fmt(options.height - margin) << "\" font-size=\"11\" fill=\"#333\">"
      << fmt(min_y) << "</text>\n";
  svg << "<text x=\"" << fmt(margin - 36) << "\" y=\"" << fmt(margin + 10)
      << "\" font-size=\"11\" fill=\"#333\">" << fmt(max_y) << "</text>\n";

  // Apollonius circles under the points
  for (const CircleRecord& c : result.circles) {
    const char* color = kPalette[((c.group % kPaletteSize) + kPaletteSize) %
                                 kPaletteSize];
    svg << "<circle cx=\"" << fmt(sx(c.cx)) << "\" cy=\"" << fmt(sy(c.cy))
        << "\" r=\"" << fmt(c.radius * scale) << "\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"1.2\" stroke-dasharray=\"5,3\"/>\n";
  }

  for (int i = 0; i < data.n; ++i) {
    const double x = sx(data.at(i, 0));
    const double y = sy(data.at(i, 1));
    const int g = result.assignments[i];
    if (g == kOutlierGroup) {
      // cross marker
      svg << "<path d=\"M" << fmt(x - 4) << ' ' << fmt(y - 4) << " L"
          << fmt(x + 4) << ' ' << fmt(y + 4) << " M" << fmt(x - 4) << ' '
          << fmt(y + 4) << " L" << fmt(x + 4) << ' ' << fmt(y - 4)
          << "\" stroke=\"black\" stroke-width=\"1.8\"/>\n";
      continue;
    }
    const char* color =
        kPalette[((g % kPaletteSize) + kPaletteSize) % kPaletteSize];
    if (is_target[i]) {
      // triangle marker for targets
      svg << "<path d=\"M" << fmt(x) << ' ' << fmt(y - 6) << " L"
          << fmt(x + 5.5) << ' ' << fmt(y + 4) << " L" << fmt(x - 5.5) << ' '
          << fmt(y + 4) << " Z\" fill=\"" << color
          << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    } else {
      svg << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
          << "\" r=\"3\" fill=\"" << color << "\" fill-opacity=\"0.8\"/>\n";
    }
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace ncar
