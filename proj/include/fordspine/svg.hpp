#pragma once

#include <cstdio>
#include <string>

#include "fordspine/scene.hpp"

namespace fordspine {

namespace detail {

inline const char* palette(int i) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};
  if (i < 0) return "#888888";
  return colors[i % 8];
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

/// SVG snapshot of the boundary pattern on C. Output bytes depend only on the scene.
///
/// The window maps to a 800 px wide canvas with the imaginary axis pointing up.
/// Visible circles are solid, covered ones dashed; chords are `line` elements
/// and nothing else uses `line`, so they can be counted.
inline std::string to_svg(const Scene& sc) {
  using detail::fmt;
  const Rectangle& w = sc.window;
  const double width = 800.0;
  const double scale = w.empty() ? 1.0 : width / (w.x1 - w.x0);
  const double height = w.empty() ? width : (w.y1 - w.y0) * scale;
  auto px = [&](Complex z) { return std::make_pair((z.real() - w.x0) * scale, (w.y1 - z.imag()) * scale); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
         fmt(width) + " " + fmt(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) + "\" fill=\"white\"/>\n";

  const auto o = px({0.0, 0.0});
  out += "<path class=\"axes\" d=\"M 0 " + fmt(o.second) + " H " + fmt(width) + " M " + fmt(o.first) + " 0 V " + fmt(height) +
         "\" stroke=\"#cccccc\" stroke-width=\"1\" fill=\"none\"/>\n";

  out += "<polyline class=\"lattice\" points=\"";
  for (int i = 0; i <= 4; ++i) {
    const auto p = px(sc.parallelogram[static_cast<std::size_t>(i % 4)]);
    if (i != 0) out += ' ';
    out += fmt(p.first) + "," + fmt(p.second);
  }
  out += "\" stroke=\"#999999\" stroke-width=\"1\" fill=\"none\"/>\n";

  for (const CircleRecord& c : sc.circles) {
    const auto p = px(c.center);
    out += "<circle cx=\"" + fmt(p.first) + "\" cy=\"" + fmt(p.second) + "\" r=\"" + fmt(c.radius * scale) + "\" stroke=\"" +
           detail::palette(c.color) + "\" stroke-width=\"1.5\" fill=\"none\"";
    if (!c.visible) out += " stroke-dasharray=\"4 3\"";
    out += "><title>" + c.word + "</title></circle>\n";
  }
  for (const ChordRecord& c : sc.chords) {
    const auto a = px(c.from);
    const auto b = px(c.to);
    out += "<line x1=\"" + fmt(a.first) + "\" y1=\"" + fmt(a.second) + "\" x2=\"" + fmt(b.first) + "\" y2=\"" + fmt(b.second) +
           "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const TangencyMarker& t : sc.tangencies) {
    const auto p = px(t.point);
    out += "<circle class=\"tangency\" cx=\"" + fmt(p.first) + "\" cy=\"" + fmt(p.second) + "\" r=\"4\" fill=\"orange\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fordspine
