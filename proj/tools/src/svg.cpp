#include "dit/cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace dit::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!(lo <= hi)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

double nice_step(double span) {
  const double raw = span / 5.0;
  const double base = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (raw <= m * base) return m * base;
  }
  return 10.0 * base;
}

}  // namespace

std::string render_svg(const Plot& plot) {
  Range xr, yr;
  for (const Series& s : plot.series) {
    for (double v : s.x) xr.add(v);
    for (double v : s.y) yr.add(v);
  }
  xr.settle();
  yr.settle();
  const double pad = 0.05 * (yr.hi - yr.lo);
  yr.lo -= pad;
  yr.hi += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto sy = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" viewBox=\"0 0 720 480\">\n";
  out += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         escape(plot.title) + "</text>\n";
  out += "<rect x=\"" + fmt("%.1f", kLeft) + "\" y=\"" + fmt("%.1f", kTop) + "\" width=\"" + fmt("%.1f", pw) +
         "\" height=\"" + fmt("%.1f", ph) + "\" fill=\"none\" stroke=\"black\"/>\n";

  // Ticks and grid lines.
  const double xs = nice_step(xr.hi - xr.lo);
  for (double t = std::ceil(xr.lo / xs) * xs; t <= xr.hi + 1e-9 * xs; t += xs) {
    const double tick = std::abs(t) < 1e-9 * xs ? 0.0 : t;
    const std::string px = fmt("%.2f", sx(tick));
    out += "<line x1=\"" + px + "\" y1=\"" + fmt("%.1f", kTop) + "\" x2=\"" + px + "\" y2=\"" +
           fmt("%.1f", kTop + ph) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + px + "\" y=\"" + fmt("%.1f", kTop + ph + 18) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + fmt("%g", tick) +
           "</text>\n";
  }
  const double ys = nice_step(yr.hi - yr.lo);
  for (double t = std::ceil(yr.lo / ys) * ys; t <= yr.hi + 1e-9 * ys; t += ys) {
    const double tick = std::abs(t) < 1e-9 * ys ? 0.0 : t;
    const std::string py = fmt("%.2f", sy(tick));
    out += "<line x1=\"" + fmt("%.1f", kLeft) + "\" y1=\"" + py + "\" x2=\"" + fmt("%.1f", kLeft + pw) +
           "\" y2=\"" + py + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + fmt("%.1f", kLeft - 8) + "\" y=\"" + py +
           "\" text-anchor=\"end\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           fmt("%g", tick) + "</text>\n";
  }
  out += "<text x=\"" + fmt("%.1f", kLeft + pw / 2) + "\" y=\"" + fmt("%.1f", kHeight - 14) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(plot.x_label) +
         "</text>\n";
  out += "<text x=\"20\" y=\"" + fmt("%.1f", kTop + ph / 2) + "\" transform=\"rotate(-90 20 " +
         fmt("%.1f", kTop + ph / 2) +
         ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" + escape(plot.y_label) +
         "</text>\n";

  for (std::size_t k = 0; k < plot.series.size(); ++k) {
    const Series& s = plot.series[k];
    const char* color = kColors[k % std::size(kColors)];
    std::string points;
    auto flush = [&] {
      if (!points.empty()) {
        out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"" +
               points + "\"/>\n";
        points.clear();
      }
    };
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        flush();
        continue;
      }
      if (i > 0 && s.break_above > 0.0 && std::abs(s.y[i] - s.y[i - 1]) > s.break_above) flush();
      if (!points.empty()) points += ' ';
      points += fmt("%.2f", sx(s.x[i])) + "," + fmt("%.2f", sy(s.y[i]));
    }
    flush();

    const double ly = kTop + 16.0 + 20.0 * static_cast<double>(k);
    const double lx = kLeft + pw + 12.0;
    out += "<line x1=\"" + fmt("%.1f", lx) + "\" y1=\"" + fmt("%.1f", ly) + "\" x2=\"" + fmt("%.1f", lx + 24) +
           "\" y2=\"" + fmt("%.1f", ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + fmt("%.1f", lx + 30) + "\" y=\"" + fmt("%.1f", ly) +
           "\" dominant-baseline=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" + escape(s.label) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dit::cli
