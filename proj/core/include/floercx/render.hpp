#ifndef FLOERCX_RENDER_HPP
#define FLOERCX_RENDER_HPP

#include "floercx/complex.hpp"

#include <string>
#include <vector>

namespace floercx {

// Scene for the SVG backend: original curve in black, pushoff in red,
// generators as labeled dots, selected bigons as shaded faces. Deterministic
// output: fixed-point coordinates, fixed element order.
struct RenderScene {
    const Curve* curve = nullptr;
    const Curve* pushoff = nullptr;           // optional
    const ChainComplex* complex = nullptr;    // optional: labeled generator dots
    std::vector<const Bigon*> highlights;     // optional: shaded discs
    const Arrangement* arr = nullptr;         // required when highlights given
};

std::string render_svg(const RenderScene& scene);

}  // namespace floercx

#endif
