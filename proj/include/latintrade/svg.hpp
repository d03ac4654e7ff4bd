#pragma once

// SVG 1.1 rendering of a plane tessellation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tessellate.hpp"

namespace latintrade {

struct SvgOptions {
  bool show_labels = true;
  bool show_axes = false;
  std::string shade_color = "#c8c8c8";
  double scale = 48.0; // pixels per unit side
  double margin = 24.0;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000")
    s = "0.000";
  return s;
}

inline std::string xml_escape(const std::string &text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
    case '&':
      out += "&amp;";
      break;
    case '<':
      out += "&lt;";
      break;
    case '>':
      out += "&gt;";
      break;
    case '"':
      out += "&quot;";
      break;
    default:
      out += ch;
    }
  }
  return out;
}

// "111" when every label is one character, "r:c:s" otherwise.
inline std::string short_label(const Entry &e) {
  if (e.row().value().size() == 1 && e.col().value().size() == 1 && e.sym().value().size() == 1)
    return e.row().value() + e.col().value() + e.sym().value();
  return to_string(e);
}

} // namespace detail

/// Deterministic SVG: one <polygon> per triangle (shaded ones filled), solid
/// black-white sides, dashed white-star sides, dotted black-star sides,
/// filled dots for black vertices, hollow circles for white vertices, star
/// glyphs for star vertices, and entry labels at centroids.
inline std::string render_svg(const TessellationDrawing &d, const SvgOptions &opt = {}) {
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  for (const auto &t : d.triangles) {
    for (std::size_t v = 0; v < 3; ++v) {
      const auto p = t.point(v);
      if (first) {
        min_x = max_x = p[0];
        min_y = max_y = p[1];
        first = false;
      }
      min_x = std::min(min_x, p[0]);
      max_x = std::max(max_x, p[0]);
      min_y = std::min(min_y, p[1]);
      max_y = std::max(max_y, p[1]);
    }
  }
  const double width = (max_x - min_x) * opt.scale + 2 * opt.margin;
  const double height = (max_y - min_y) * opt.scale + 2 * opt.margin;
  auto sx = [&](double x) { return detail::num((x - min_x) * opt.scale + opt.margin); };
  auto sy = [&](double y) { return detail::num((max_y - y) * opt.scale + opt.margin); };
  auto at = [&](LatticePoint p) {
    const auto q = to_plane(p);
    return std::pair{sx(q[0]), sy(q[1])};
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + detail::num(width) +
         "\" height=\"" + detail::num(height) + "\" viewBox=\"0 0 " + detail::num(width) + " " +
         detail::num(height) + "\">\n";

  out += "<g class=\"triangles\" stroke=\"none\">\n";
  for (const auto &t : d.triangles) {
    out += "<polygon points=\"";
    for (std::size_t v = 0; v < 3; ++v) {
      const auto [x, y] = at(t.vertices[v]);
      out += (v ? " " : "") + x + "," + y;
    }
    out += "\" fill=\"" + (t.shaded ? detail::xml_escape(opt.shade_color) : std::string("white")) +
           "\"/>\n";
  }
  out += "</g>\n";

  // Sides: 0 black-white solid, 1 white-star dashed, 2 black-star dotted.
  std::array<std::set<std::pair<LatticePoint, LatticePoint>>, 3> sides;
  for (const auto &t : d.triangles) {
    auto add = [&](int style, LatticePoint a, LatticePoint b) {
      sides[static_cast<std::size_t>(style)].insert(std::minmax(a, b));
    };
    add(0, t.vertices.black, t.vertices.white);
    add(1, t.vertices.white, t.vertices.star);
    add(2, t.vertices.black, t.vertices.star);
  }
  const std::array<const char *, 3> dash{"", " stroke-dasharray=\"6,4\"", " stroke-dasharray=\"1.5,3\""};
  out += "<g class=\"edges\" stroke=\"black\" stroke-width=\"1.2\">\n";
  for (std::size_t style = 0; style < 3; ++style) {
    for (const auto &[a, b] : sides[style]) {
      const auto [x1, y1] = at(a);
      const auto [x2, y2] = at(b);
      out += "<line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 + "\" y2=\"" + y2 + "\"" +
             dash[style] + "/>\n";
    }
  }
  out += "</g>\n";

  if (d.fundamental_domain) {
    const auto [u, v] = *d.fundamental_domain;
    const LatticePoint o{0, 0};
    const std::array<LatticePoint, 4> corners{o, u, u + v, v};
    out += "<path class=\"domain\" fill=\"none\" stroke=\"#808080\" stroke-width=\"4\" "
           "stroke-opacity=\"0.7\" d=\"";
    for (std::size_t c = 0; c < 4; ++c) {
      const auto [x, y] = at(corners[c]);
      out += (c ? " L " : "M ") + x + " " + y;
    }
    out += " Z\"/>\n";
  }

  std::set<LatticePoint> black, white, star;
  for (const auto &t : d.triangles) {
    black.insert(t.vertices.black);
    white.insert(t.vertices.white);
    star.insert(t.vertices.star);
  }
  const double r = std::max(2.0, opt.scale * 0.07);
  out += "<g class=\"vertices\">\n";
  for (const auto &p : black) {
    const auto [x, y] = at(p);
    out += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"" + detail::num(r) + "\" fill=\"black\"/>\n";
  }
  for (const auto &p : white) {
    const auto [x, y] = at(p);
    out += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"" + detail::num(r) +
           "\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  for (const auto &p : star) {
    const auto q = to_plane(p);
    const double cx = (q[0] - min_x) * opt.scale + opt.margin;
    const double cy = (max_y - q[1]) * opt.scale + opt.margin;
    out += "<path fill=\"black\" d=\"";
    for (int k = 0; k < 10; ++k) {
      const double rad = (k % 2 == 0) ? r * 1.6 : r * 0.65;
      const double ang = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
      out += (k ? " L " : "M ") + detail::num(cx + rad * std::cos(ang)) + " " +
             detail::num(cy + rad * std::sin(ang));
    }
    out += " Z\"/>\n";
  }
  out += "</g>\n";

  if (opt.show_axes && !d.triangles.empty()) {
    const auto [ox, oy] = at({0, 0});
    out += "<g class=\"axes\" stroke=\"#d04040\" stroke-width=\"1\">\n";
    out += "<line x1=\"" + detail::num(opt.margin) + "\" y1=\"" + oy + "\" x2=\"" +
           detail::num(width - opt.margin) + "\" y2=\"" + oy + "\"/>\n";
    out += "<line x1=\"" + ox + "\" y1=\"" + detail::num(opt.margin) + "\" x2=\"" + ox + "\" y2=\"" +
           detail::num(height - opt.margin) + "\"/>\n";
    out += "</g>\n";
  }

  if (opt.show_labels) {
    const double font = std::max(6.0, opt.scale * 0.22);
    out += "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"" + detail::num(font) +
           "\" text-anchor=\"middle\" dominant-baseline=\"central\">\n";
    for (const auto &t : d.triangles) {
      const auto c = t.centroid();
      out += "<text x=\"" + sx(c[0]) + "\" y=\"" + sy(c[1]) + "\">" +
             detail::xml_escape(detail::short_label(t.label)) + "</text>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

} // namespace latintrade
