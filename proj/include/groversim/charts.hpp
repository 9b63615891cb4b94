#ifndef GROVERSIM_CHARTS_HPP
#define GROVERSIM_CHARTS_HPP

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

// Minimal SVG scatter/line chart for bench output.  A convenience for eyeball
// checks; never an acceptance artifact.

namespace groversim {

struct chart_series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

inline void write_svg_chart(std::ostream& os, const std::string& title, const std::string& x_label,
                            const std::string& y_label, const std::vector<chart_series>& series) {
  const double width = 640.0, height = 420.0, pad = 56.0;
  double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
  bool first = true;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (first) {
        xmin = xmax = x;
        ymin = ymax = y;
        first = false;
      }
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (ymax == ymin) ymax = ymin + 1.0;

  const auto px = [&](double x) { return pad + (x - xmin) / (xmax - xmin) * (width - 2 * pad); };
  const auto py = [&](double y) { return height - pad - (y - ymin) / (ymax - ymin) * (height - 2 * pad); };
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return std::string(buf);
  };

  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">" << title
     << "</text>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << height - pad << "\" x2=\"" << width - pad << "\" y2=\""
     << height - pad << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << height - pad
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 12 << "\" text-anchor=\"middle\">" << x_label
     << "</text>\n";
  os << "<text x=\"16\" y=\"" << height / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << height / 2 << ")\">" << y_label << "</text>\n";
  os << "<text x=\"" << pad << "\" y=\"" << height - pad + 16 << "\">" << num(xmin) << "</text>\n";
  os << "<text x=\"" << width - pad << "\" y=\"" << height - pad + 16 << "\" text-anchor=\"end\">"
     << num(xmax) << "</text>\n";
  os << "<text x=\"" << pad - 4 << "\" y=\"" << height - pad << "\" text-anchor=\"end\">" << num(ymin)
     << "</text>\n";
  os << "<text x=\"" << pad - 4 << "\" y=\"" << pad + 4 << "\" text-anchor=\"end\">" << num(ymax)
     << "</text>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* color = colors[s % 5];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (const auto& [x, y] : series[s].points) os << px(x) << ',' << py(y) << ' ';
    os << "\"/>\n";
    for (const auto& [x, y] : series[s].points)
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    os << "<text x=\"" << width - pad - 4 << "\" y=\"" << pad + 14.0 * static_cast<double>(s)
       << "\" text-anchor=\"end\" fill=\"" << color << "\">" << series[s].label << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace groversim

#endif
