#ifndef FLOERCX_MORSE_HPP
#define FLOERCX_MORSE_HPP

#include "floercx/curve.hpp"

#include <vector>

namespace floercx {

struct SelfIntersection;

// PL Morse data on the curve: either f = -y restricted to the curve, or
// prescribed rational values per vertex, affine on segments. PL Morse means
// no segment is level, so every local extremum sits at a vertex and is strict.
struct MorseFunction {
    MorseSpec::Mode mode = MorseSpec::Height;
    std::vector<Rat> values;  // used in VertexValues mode

    static MorseFunction height() { return {}; }
    static MorseFunction from_spec(const MorseSpec& spec);

    Rat at_vertex(const Curve& c, int i) const;
    Rat seg_df(const Curve& c, int i) const;  // f(v_{i+1}) - f(v_i)
    Rat at_param(const Curve& c, const CurveParam& p) const;

    // a*f as an explicit vertex-values function (used by the rescaling check).
    MorseFunction scaled(const Curve& c, const Rat& a) const;
};

struct CriticalPoint {
    int vertex = 0;       // anchored at a curve vertex
    CurveParam param{};   // (vertex, 0)
    int index = 0;        // 0 = local minimum of f, 1 = local maximum
    Rat value{};
    std::string label;
};

// All strict local extrema of f along c, in curve order, with labels resolved
// from the curve's label table. Throws GenericityError on level segments.
std::vector<CriticalPoint> critical_points(const Curve& c, const MorseFunction& f);

ValidationReport validate_morse(const Curve& c, const MorseFunction& f,
                                const std::vector<SelfIntersection>& sis);

// Rigid gradient trajectory: a maximal f-monotone arc, oriented from its
// index-1 end down to its index-0 end.
struct GradientArc {
    int from_cp = 0;  // index into critical_points list, always an index-1 point
    int to_cp = 0;    // always an index-0 point
    Direction dir = Direction::Forward;  // traversal sense along the curve
    std::vector<Point> pts;
};

std::vector<GradientArc> rigid_trajectories(const Curve& c, const MorseFunction& f);

}  // namespace floercx

#endif
