#pragma once

#include "lcmsep/trace.hpp"

#include <iosfwd>
#include <optional>

namespace lcmsep {

struct SvgOptions {
    std::optional<Hexagon> hexagon;  // guide
    std::optional<Circle> circle;    // guide
    int width = 640;
};

/// Static rendering of a trace: guides, movement strokes colored by cycle
/// phase, hollow initial and filled final positions.
void render_svg(std::ostream& os, const Trace& trace, const SvgOptions& opts);

}  // namespace lcmsep
