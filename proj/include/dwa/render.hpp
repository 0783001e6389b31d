#pragma once

#include <string>

#include "dwa/algebra.hpp"

namespace dwa {

// Static diagram rendering: one picture per term with a coefficient caption,
// strands at fixed x positions, layers at increasing heights. Black strands
// are thin lines, red strands doubled lines with their label at the bottom,
// x-dots filled circles, E-dots labeled red circles.
struct RenderOptions {
    // When splitter_j > 0, decorate with the trivalent vertex merging reds
    // j, j+1 (at the top for merge_top, mirrored otherwise).
    int splitter_j = 0;
    bool merge_top = true;
    std::size_t max_terms = 64;  // exceeding this is a resource error
};

std::string render_svg(const Element& elem, const RenderOptions& opts = {});
std::string render_tikz(const Element& elem, const RenderOptions& opts = {});

}  // namespace dwa
