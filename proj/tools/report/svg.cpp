#include "svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace rtk::report {
namespace {

constexpr double kLegendWidth = 150.0;
constexpr double kLeftMargin = 90.0;
constexpr double kTopMargin = 40.0;

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class Svg {
 public:
  Svg(double width, double height) : width_(width), height_(height) {}

  void rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view extra = {}) {
    body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
          << "\" height=\"" << num(h) << "\" fill=\"" << fill << "\"";
    if (!extra.empty()) body_ << ' ' << extra;
    body_ << "/>\n";
  }

  void state_rect(double x, double y, double w, double h, StateSymbol s) {
    const std::string attrs = "stroke=\"#cccccc\" stroke-width=\"0.3\" data-state=\"" +
                              render_state(s) + "\"";
    rect(x, y, w, h, state_color(s), attrs);
  }

  void text(double x, double y, std::string_view content, double size = 10.0,
            std::string_view anchor = "start") {
    body_ << "<text x=\"" << num(x) << "\" y=\"" << num(y) << "\" font-size=\"" << num(size)
          << "\" text-anchor=\"" << anchor << "\" font-family=\"sans-serif\">" << escape(content)
          << "</text>\n";
  }

  void line(double x1, double y1, double x2, double y2, std::string_view stroke = "#333333") {
    body_ << "<line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
          << "\" y2=\"" << num(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"1\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& points, std::string_view stroke) {
    body_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i > 0) body_ << ' ';
      body_ << num(points[i].first) << ',' << num(points[i].second);
    }
    body_ << "\"/>\n";
  }

  void legend(double x, double y) {
    text(x, y, "States", 11.0);
    double row = y + 8.0;
    for (StateSymbol s : full_alphabet()) {
      rect(x, row, 12.0, 12.0, state_color(s),
           "stroke=\"#333333\" stroke-width=\"0.5\" data-legend=\"" + render_state(s) + "\"");
      text(x + 18.0, row + 10.0, render_state(s));
      row += 16.0;
    }
  }

  std::string finish(std::string_view title) const {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width_) << "\" height=\""
        << num(height_) << "\" viewBox=\"0 0 " << num(width_) << ' ' << num(height_) << "\">\n"
        << "<title>" << escape(title) << "</title>\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << num(width_) << "\" height=\"" << num(height_)
        << "\" fill=\"#ffffff\"/>\n"
        << "<text x=\"10\" y=\"22\" font-size=\"14\" font-family=\"sans-serif\">" << escape(title)
        << "</text>\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

  double legend_x() const { return width_ - kLegendWidth + 10.0; }

 private:
  double width_;
  double height_;
  std::ostringstream body_;
};

double legend_height() { return 30.0 + 16.0 * static_cast<double>(StateSymbol::kAlphabetSize); }

// Draws runs of equal states as single rectangles.
void draw_row(Svg& svg, double x0, double y, double width, double height,
              std::span<const StateSymbol> states) {
  if (states.empty()) return;
  const double unit = width / static_cast<double>(states.size());
  std::size_t start = 0;
  for (std::size_t i = 1; i <= states.size(); ++i) {
    if (i == states.size() || states[i] != states[start]) {
      svg.state_rect(x0 + unit * static_cast<double>(start), y,
                     unit * static_cast<double>(i - start), height, states[start]);
      start = i;
    }
  }
}

}  // namespace

std::string_view state_color(StateSymbol s) {
  static const std::array<std::pair<const char*, const char*>, StateSymbol::kAlphabetSize> kColors{{
      {"B", "#40e0d0"},    // turquoise
      {"I", "#3cb043"},    // green
      {"F", "#6a89b0"},    // gray-blue
      {"T", "#ff00ff"},    // fuchsia
      {"BF", "#3f8f9a"},
      {"BFT", "#4b3b66"},
      {"BI", "#2e9c85"},
      {"BIF", "#808080"},  // gray
      {"BIFT", "#000000"}, // black
      {"BIT", "#5c3f6e"},
      {"BT", "#8a4fa6"},
      {"FT", "#8c4f9e"},
      {"IF", "#4d7a63"},
      {"IFT", "#3d3352"},
      {"IT", "#8f4a86"},
      {"X", "#ffa500"},    // orange
      {"Z", "#ffffff"},    // white
  }};
  const std::string name = render_state(s);
  for (const auto& [state, color] : kColors) {
    if (name == state) return color;
  }
  return "#ffffff";
}

std::string sequence_index_svg(std::string_view title, std::span<const SequenceRow> rows) {
  const double bar_height = 12.0;
  const double plot_width = 600.0;
  const double height = std::max(kTopMargin + bar_height * static_cast<double>(rows.size()) + 40.0,
                                 kTopMargin + legend_height());
  Svg svg(kLeftMargin + plot_width + 20.0 + kLegendWidth, height);
  // Bottom-up like a classic sequence index plot: first row at the bottom.
  const double base = kTopMargin + bar_height * static_cast<double>(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const double y = base - bar_height * static_cast<double>(r + 1);
    svg.text(kLeftMargin - 6.0, y + bar_height - 2.0, rows[r].label, 8.0, "end");
    draw_row(svg, kLeftMargin, y, plot_width, bar_height - 1.0, rows[r].states);
  }
  svg.line(kLeftMargin, base + 2.0, kLeftMargin + plot_width, base + 2.0);
  svg.text(kLeftMargin, base + 16.0, "0");
  svg.text(kLeftMargin + plot_width, base + 16.0, "100%", 10.0, "end");
  svg.legend(svg.legend_x(), kTopMargin);
  return svg.finish(title);
}

std::string transition_heatmap_svg(std::string_view title, const TransitionMatrix& tm) {
  const double cell = 34.0;
  const std::size_t n = tm.alphabet.size();
  const double grid = cell * static_cast<double>(n);
  const double height = std::max(kTopMargin + 30.0 + grid + 40.0, kTopMargin + legend_height());
  Svg svg(kLeftMargin + grid + 30.0 + kLegendWidth, height);
  const double top = kTopMargin + 30.0;
  for (std::size_t j = 0; j < n; ++j) {
    svg.text(kLeftMargin + cell * (static_cast<double>(j) + 0.5), top - 6.0,
             render_state(tm.alphabet[j]), 9.0, "middle");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double y = top + cell * static_cast<double>(i);
    svg.text(kLeftMargin - 6.0, y + cell / 2.0 + 3.0, render_state(tm.alphabet[i]), 9.0, "end");
    for (std::size_t j = 0; j < n; ++j) {
      const double p = tm.rates(i, j);
      const int shade = static_cast<int>(255.0 - 200.0 * p);
      char fill[16];
      std::snprintf(fill, sizeof fill, "#%02x%02xff", shade, shade);
      const double x = kLeftMargin + cell * static_cast<double>(j);
      svg.rect(x, y, cell, cell, fill, "stroke=\"#999999\" stroke-width=\"0.5\"");
      if (p > 0.0) svg.text(x + cell / 2.0, y + cell / 2.0 + 3.0, num(p), 8.0, "middle");
    }
  }
  svg.text(kLeftMargin, top + grid + 20.0, "row: from state, column: to state", 9.0);
  svg.legend(svg.legend_x(), kTopMargin);
  return svg.finish(title);
}

std::string modal_svg(std::string_view title, const ModalTrajectory& modal) {
  const double plot_width = 600.0;
  const double plot_height = 200.0;
  const double height = std::max(kTopMargin + plot_height + 60.0, kTopMargin + legend_height());
  Svg svg(kLeftMargin + plot_width + 20.0 + kLegendWidth, height);
  const double base = kTopMargin + plot_height;
  const std::size_t n = modal.positions.size();
  const double unit = n == 0 ? plot_width : plot_width / static_cast<double>(n);
  for (std::size_t p = 0; p < n; ++p) {
    const ModalPosition& m = modal.positions[p];
    const double h = plot_height * m.frequency;
    svg.state_rect(kLeftMargin + unit * static_cast<double>(p), base - h, unit, h, m.state);
  }
  svg.line(kLeftMargin, base, kLeftMargin + plot_width, base);
  svg.line(kLeftMargin, kTopMargin, kLeftMargin, base);
  for (int tick = 0; tick <= 4; ++tick) {
    const double f = tick / 4.0;
    svg.text(kLeftMargin - 6.0, base - plot_height * f + 3.0, num(f), 9.0, "end");
  }
  svg.text(kLeftMargin, base + 18.0, "position", 9.0);
  svg.legend(svg.legend_x(), kTopMargin);
  return svg.finish(title);
}

std::string dss_frequency_svg(std::string_view title, std::span<const DssFrequency> table,
                              std::size_t max_rows) {
  const std::size_t rows = std::min(max_rows, table.size());
  const double bar_height = 14.0;
  const double cell = 24.0;
  std::size_t longest = 1;
  for (std::size_t r = 0; r < rows; ++r) longest = std::max(longest, table[r].pattern.size());
  const double plot_width = cell * static_cast<double>(longest);
  const double curve_width = 160.0;
  const double height = std::max(kTopMargin + bar_height * static_cast<double>(rows) + 50.0,
                                 kTopMargin + legend_height());
  Svg svg(kLeftMargin + plot_width + curve_width + 40.0 + kLegendWidth, height);
  const double curve_x = kLeftMargin + plot_width + 20.0;
  std::vector<std::pair<double, double>> curve;
  for (std::size_t r = 0; r < rows; ++r) {
    const DssFrequency& row = table[r];
    const double y = kTopMargin + bar_height * static_cast<double>(r);
    svg.text(kLeftMargin - 6.0, y + bar_height - 3.0, std::to_string(row.count), 9.0, "end");
    for (std::size_t p = 0; p < row.pattern.size(); ++p) {
      svg.state_rect(kLeftMargin + cell * static_cast<double>(p), y, cell, bar_height - 1.0,
                     row.pattern[p]);
    }
    curve.emplace_back(curve_x + curve_width * row.cumulative_ratio, y + bar_height / 2.0);
  }
  const double bottom = kTopMargin + bar_height * static_cast<double>(rows);
  svg.line(curve_x, kTopMargin, curve_x, bottom);
  if (!curve.empty()) svg.polyline(curve, "#d62728");
  svg.text(curve_x, bottom + 14.0, "0", 9.0);
  svg.text(curve_x + curve_width, bottom + 14.0, "1", 9.0, "end");
  svg.text(curve_x, bottom + 28.0, "cumulative frequency", 9.0);
  svg.legend(svg.legend_x(), kTopMargin);
  return svg.finish(title);
}

std::string pattern_groups_svg(std::string_view title, std::span<const PatternGroup> groups) {
  const double bar_height = 10.0;
  const double header = 20.0;
  const double plot_width = 400.0;
  double total = kTopMargin;
  for (const PatternGroup& g : groups) total += header + bar_height * static_cast<double>(g.rows.size()) + 10.0;
  Svg svg(kLeftMargin + plot_width + 20.0 + kLegendWidth,
          std::max(total + 20.0, kTopMargin + legend_height()));
  double y = kTopMargin;
  for (const PatternGroup& g : groups) {
    svg.text(10.0, y + 14.0, g.label, 11.0);
    y += header;
    std::size_t longest = 1;
    for (const SequenceRow& row : g.rows) longest = std::max(longest, row.states.size());
    const double unit = plot_width / static_cast<double>(longest);
    for (const SequenceRow& row : g.rows) {
      svg.text(kLeftMargin - 6.0, y + bar_height - 2.0, row.label, 7.0, "end");
      for (std::size_t p = 0; p < row.states.size(); ++p) {
        svg.state_rect(kLeftMargin + unit * static_cast<double>(p), y, unit, bar_height - 1.0,
                       row.states[p]);
      }
      y += bar_height;
    }
    y += 10.0;
  }
  svg.legend(svg.legend_x(), kTopMargin);
  return svg.finish(title);
}

}  // namespace rtk::report
