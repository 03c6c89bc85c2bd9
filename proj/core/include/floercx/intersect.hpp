#ifndef FLOERCX_INTERSECT_HPP
#define FLOERCX_INTERSECT_HPP

#include "floercx/curve.hpp"

#include <string>
#include <vector>

namespace floercx {

// Transverse double point of one curve. p comes before q in curve order.
struct SelfIntersection {
    Point at{};
    CurveParam p{}, q{};
    std::string label;  // two-character labels name the p and q branches
};

// Transverse intersection of two curves. A crossing may sit at a vertex of
// one curve (this is how the pushoff meets the original at critical points);
// there it must still cross branch-transversally. Never at a shared vertex.
struct CrossPoint {
    Point at{};
    CurveParam on_a{}, on_b{};
    int sign = 0;  // sign of cross(dir_a, dir_b) at the crossing
    bool vertex_a = false, vertex_b = false;
};

// One entry per geometric double point, ordered by (p.seg, p.t).
// Throws GenericityError on tangency, overlap, or triple points.
std::vector<SelfIntersection> self_intersections(const Curve& c);

// All transverse crossings of a and b, ordered by the parameter on a.
// Throws GenericityError on tangential contact, shared arcs or vertices.
std::vector<CrossPoint> curve_intersections(const Curve& a, const Curve& b);

// Conservative positive bound on admissible normal displacement: half the
// minimum Chebyshev distance between non-adjacent non-crossing segment pairs,
// floored further by a corner-sharpness bound per vertex. Homogeneous of
// degree 1 in the curve, so scaling the curve scales the bound exactly.
Rat reach_estimate(const Curve& c);

}  // namespace floercx

#endif
