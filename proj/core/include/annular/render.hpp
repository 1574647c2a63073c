#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "annular/model.hpp"

namespace annular {

struct RenderOptions {
  double size = 400.0;
  double outer_radius = 180.0;
  double inner_radius = 70.0;
};

/// SVG 1.1 drawing: two concentric boundary circles, cross-cuts as chords
/// between them, half-circles as arcs bulging into the annulus. Endpoints
/// are evenly spaced on each boundary and position 0 sits at angle zero on
/// both. The canonical code is embedded in a <desc id="annular-code">
/// element. Output is byte-stable for a given matching and options.
std::string render_svg(const AnnularMatching& matching, const RenderOptions& options = {});

/// Code embedded by render_svg, if present.
std::optional<std::string> code_from_svg(std::string_view svg);

}  // namespace annular
