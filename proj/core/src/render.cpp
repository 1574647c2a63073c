#include "annular/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace annular {

namespace {

constexpr std::string_view kCodeOpen = "<desc id=\"annular-code\" data-grammar=\"annular-code/1\">";
constexpr std::string_view kCodeClose = "</desc>";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Frame {
  double cx;
  double cy;
  double outer;
  double inner;

  double angle(std::size_t index, std::size_t count) const {
    return 2.0 * std::numbers::pi * static_cast<double>(index) / static_cast<double>(count);
  }
  // Counter-clockwise on screen: y grows downwards in SVG.
  std::string point(double radius, double theta) const {
    return num(cx + radius * std::cos(theta)) + " " + num(cy - radius * std::sin(theta));
  }
};

std::string arc_path(const Frame& f, Boundary side, std::size_t from, std::size_t to, std::size_t count) {
  const double r = side == Boundary::Outer ? f.outer : f.inner;
  const double width = f.outer - f.inner;
  const std::size_t span = (to + count - from) % count;
  const double share = static_cast<double>(span) / static_cast<double>(count);
  const double a = f.angle(from, count);
  const double mid = a + std::numbers::pi * share;
  // Wider arcs reach further into the annulus so nested arcs stay nested.
  const double depth = width * (0.15 + 0.75 * share);
  const double control = side == Boundary::Outer ? r - depth : r + depth;
  return "M " + f.point(r, a) + " Q " + f.point(control, mid) + " " + f.point(r, f.angle(to, count));
}

}  // namespace

std::string render_svg(const AnnularMatching& matching, const RenderOptions& options) {
  const EndpointDiagram d = endpoints(matching);
  const Frame f{options.size / 2, options.size / 2, options.outer_radius, options.inner_radius};
  const std::size_t n_out = d.outer.size();
  const std::size_t n_in = d.inner.size();

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(options.size) +
         "\" height=\"" + num(options.size) + "\" viewBox=\"0 0 " + num(options.size) + " " +
         num(options.size) + "\">\n";
  svg += " " + std::string(kCodeOpen) + matching.code() + std::string(kCodeClose) + "\n";
  svg += " <circle cx=\"" + num(f.cx) + "\" cy=\"" + num(f.cy) + "\" r=\"" + num(f.outer) +
         "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  svg += " <circle cx=\"" + num(f.cx) + "\" cy=\"" + num(f.cy) + "\" r=\"" + num(f.inner) +
         "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\"/>\n";

  for (const auto& chord : d.chords) {
    switch (chord.kind) {
      case ChordKind::Crosscut: {
        const auto outer = chord.first.side == Boundary::Outer ? chord.first : chord.second;
        const auto inner = chord.first.side == Boundary::Outer ? chord.second : chord.first;
        const std::string p = f.point(f.outer, f.angle(outer.index, n_out));
        const std::string q = f.point(f.inner, f.angle(inner.index, n_in));
        svg += " <path class=\"crosscut\" d=\"M " + p + " L " + q +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        break;
      }
      case ChordKind::OuterHalfCircle:
        svg += " <path class=\"outer-arc\" d=\"" +
               arc_path(f, Boundary::Outer, chord.first.index, chord.second.index, n_out) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        break;
      case ChordKind::InnerHalfCircle:
        svg += " <path class=\"inner-arc\" d=\"" +
               arc_path(f, Boundary::Inner, chord.first.index, chord.second.index, n_in) +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
        break;
    }
  }
  auto dots = [&](double radius, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      const double theta = f.angle(i, count);
      svg += " <circle class=\"endpoint\" cx=\"" + num(f.cx + radius * std::cos(theta)) + "\" cy=\"" +
             num(f.cy - radius * std::sin(theta)) + "\" r=\"3.000\" fill=\"black\"/>\n";
    }
  };
  dots(f.outer, n_out);
  dots(f.inner, n_in);
  svg += "</svg>\n";
  return svg;
}

std::optional<std::string> code_from_svg(std::string_view svg) {
  const auto open = svg.find(kCodeOpen);
  if (open == std::string_view::npos) return std::nullopt;
  const auto start = open + kCodeOpen.size();
  const auto close = svg.find(kCodeClose, start);
  if (close == std::string_view::npos) return std::nullopt;
  return std::string(svg.substr(start, close - start));
}

}  // namespace annular
