#pragma once

// Standalone SVG drawing of a lattice parallelogram on its grid.

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "lep/lattice.hpp"
#include "lep/lep.hpp"

namespace lep {

namespace detail {

inline std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

/// Grid lines are drawn only while the bounding box is at most this wide.
inline constexpr long kMaxGridCells = 120;

inline std::string render_svg(const LepPair& p, const LatticeParallelogram& raw) {
  const LatticeParallelogram lp = first_quadrant(raw);
  Int w = 0, h = 0;
  for (const auto& v : lp.v) {
    w = std::max(w, v.x);
    h = std::max(h, v.y);
  }
  const double extent = std::max({w.convert_to<double>(), h.convert_to<double>(), 1.0});
  const double cell = std::clamp(560.0 / extent, 0.0, 40.0);
  const double margin = 60.0;
  const double width = w.convert_to<double>() * cell + 2 * margin;
  const double height = h.convert_to<double>() * cell + 2 * margin + 30.0;
  const auto px = [&](const Int& x) { return margin + x.convert_to<double>() * cell; };
  const auto py = [&](const Int& y) { return margin + Int(h - y).convert_to<double>() * cell; };

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << detail::fmt2(width) << "\" height=\""
    << detail::fmt2(height) << "\" viewBox=\"0 0 " << detail::fmt2(width) << ' ' << detail::fmt2(height) << "\">\n";
  s << "  <rect x=\"0\" y=\"0\" width=\"" << detail::fmt2(width) << "\" height=\"" << detail::fmt2(height)
    << "\" fill=\"white\"/>\n";

  if (w <= kMaxGridCells && h <= kMaxGridCells) {
    s << "  <g stroke=\"#d0d0d0\" stroke-width=\"0.5\">\n";
    for (Int x = 0; x <= w; ++x)
      s << "    <line x1=\"" << detail::fmt2(px(x)) << "\" y1=\"" << detail::fmt2(py(0)) << "\" x2=\""
        << detail::fmt2(px(x)) << "\" y2=\"" << detail::fmt2(py(h)) << "\"/>\n";
    for (Int y = 0; y <= h; ++y)
      s << "    <line x1=\"" << detail::fmt2(px(0)) << "\" y1=\"" << detail::fmt2(py(y)) << "\" x2=\""
        << detail::fmt2(px(w)) << "\" y2=\"" << detail::fmt2(py(y)) << "\"/>\n";
    s << "  </g>\n";
  }

  s << "  <polygon points=\"";
  for (int i = 0; i < 4; ++i)
    s << (i ? " " : "") << detail::fmt2(px(lp.v[i].x)) << ',' << detail::fmt2(py(lp.v[i].y));
  s << "\" fill=\"#3060ff\" fill-opacity=\"0.15\" stroke=\"#0000ff\" stroke-width=\"2\"/>\n";

  s << "  <g font-family=\"monospace\" font-size=\"12\" fill=\"black\">\n";
  for (const auto& v : lp.v) {
    s << "    <circle cx=\"" << detail::fmt2(px(v.x)) << "\" cy=\"" << detail::fmt2(py(v.y))
      << "\" r=\"3\" fill=\"black\"/>\n";
    s << "    <text x=\"" << detail::fmt2(px(v.x) + 5) << "\" y=\"" << detail::fmt2(py(v.y) - 5) << "\">("
      << v.x << ',' << v.y << ")</text>\n";
  }
  s << "    <text x=\"" << detail::fmt2(margin) << "\" y=\"" << detail::fmt2(height - 20) << "\">a=" << p.a()
    << " b=" << p.b() << " area=" << p.area() << " perimeter=" << p.area() << "</text>\n";
  s << "  </g>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace lep
