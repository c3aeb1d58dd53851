#pragma once

// Small self-contained SVG line plots: no scripts, no external assets. One
// figure holds two stacked panels, solution curves on top and pointwise
// absolute error underneath.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "stbspline/errors.hpp"

namespace stbs::plot {

struct Curve {
  std::string label;
  std::string color = "#1f6fb2";
  bool dashed = false;
  std::vector<double> x;
  std::vector<double> y;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

inline Range span_of(const std::vector<Curve>& curves, bool vertical) {
  Range r{1e300, -1e300};
  for (const Curve& c : curves)
    for (double v : (vertical ? c.y : c.x)) {
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  if (r.lo > r.hi) return {0.0, 1.0};
  if (r.hi - r.lo < 1e-12) {
    const double pad = std::max(1e-12, std::abs(r.hi) * 0.1 + 0.1);
    return {r.lo - pad, r.hi + pad};
  }
  const double pad = 0.05 * (r.hi - r.lo);
  return {r.lo - pad, r.hi + pad};
}

// One panel with frame, ticks, curves, and a legend along the top edge.
inline void panel(std::string& out, double px, double py, double pw, double ph,
                  const std::vector<Curve>& curves, const std::string& title,
                  const std::string& ylabel) {
  const Range xr = span_of(curves, false);
  const Range yr = span_of(curves, true);
  const auto sx = [&](double x) { return px + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  const auto sy = [&](double y) { return py + ph - (y - yr.lo) / (yr.hi - yr.lo) * ph; };

  out += "<rect x='" + num(px) + "' y='" + num(py) + "' width='" + num(pw) + "' height='" +
         num(ph) + "' fill='white' stroke='#444' stroke-width='1'/>\n";
  out += "<text x='" + num(px) + "' y='" + num(py - 26.0) +
         "' font-size='14' fill='#222'>" + title + "</text>\n";
  out += "<text x='" + num(px - 44.0) + "' y='" + num(py + ph / 2.0) +
         "' font-size='12' fill='#222' transform='rotate(-90 " + num(px - 44.0) + " " +
         num(py + ph / 2.0) + ")'>" + ylabel + "</text>\n";

  const int ticks = 5;
  for (int k = 0; k <= ticks; ++k) {
    const double fx = xr.lo + (xr.hi - xr.lo) * k / ticks;
    const double fy = yr.lo + (yr.hi - yr.lo) * k / ticks;
    out += "<line x1='" + num(sx(fx)) + "' y1='" + num(py + ph) + "' x2='" + num(sx(fx)) +
           "' y2='" + num(py + ph + 5.0) + "' stroke='#444'/>\n";
    out += "<text x='" + num(sx(fx)) + "' y='" + num(py + ph + 18.0) +
           "' font-size='11' fill='#222' text-anchor='middle'>" + num(fx) + "</text>\n";
    out += "<line x1='" + num(px - 5.0) + "' y1='" + num(sy(fy)) + "' x2='" + num(px) + "' y2='" +
           num(sy(fy)) + "' stroke='#444'/>\n";
    out += "<text x='" + num(px - 8.0) + "' y='" + num(sy(fy) + 4.0) +
           "' font-size='11' fill='#222' text-anchor='end'>" + num(fy) + "</text>\n";
  }

  double lx = px + 8.0;
  for (const Curve& c : curves) {
    if (c.x.size() != c.y.size() || c.x.empty()) continue;
    std::string d = "M";
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      d += " " + num(sx(c.x[i])) + " " + num(sy(c.y[i]));
    }
    out += "<path d='" + d + "' fill='none' stroke='" + c.color + "' stroke-width='1.5'" +
           (c.dashed ? " stroke-dasharray='6 4'" : "") + "/>\n";
    out += "<line x1='" + num(lx) + "' y1='" + num(py + 12.0) + "' x2='" + num(lx + 22.0) +
           "' y2='" + num(py + 12.0) + "' stroke='" + c.color + "' stroke-width='1.5'" +
           (c.dashed ? " stroke-dasharray='6 4'" : "") + "/>\n";
    out += "<text x='" + num(lx + 26.0) + "' y='" + num(py + 16.0) +
           "' font-size='11' fill='#222'>" + c.label + "</text>\n";
    lx += 34.0 + 7.0 * static_cast<double>(c.label.size());
  }
}

}  // namespace detail

// Write the two-panel figure. Throws io_error if the file cannot be written.
inline void write_figure(const std::string& path, const std::string& title,
                         const std::vector<Curve>& solution_curves,
                         const std::vector<Curve>& error_curves) {
  const double width = 760.0;
  const double height = 640.0;
  std::string out;
  out += "<svg xmlns='http://www.w3.org/2000/svg' width='" + detail::num(width) + "' height='" +
         detail::num(height) + "' viewBox='0 0 " + detail::num(width) + " " + detail::num(height) +
         "' font-family='sans-serif'>\n";
  out += "<rect width='100%' height='100%' fill='white'/>\n";
  out += "<text x='24' y='26' font-size='16' fill='#111'>" + title + "</text>\n";
  detail::panel(out, 80.0, 70.0, 640.0, 210.0, solution_curves, "solution", "u");
  detail::panel(out, 80.0, 370.0, 640.0, 210.0, error_curves, "absolute error", "|error|");
  out += "</svg>\n";

  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path + " for writing");
  f << out;
  if (!f.good()) throw io_error("failed while writing " + path);
}

}  // namespace stbs::plot
