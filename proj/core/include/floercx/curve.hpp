#ifndef FLOERCX_CURVE_HPP
#define FLOERCX_CURVE_HPP

#include "floercx/geometry.hpp"

#include <string>
#include <vector>

namespace floercx {

// Point of the parametrizing circle: position t in [0,1) along segment `seg`.
// Distinct from image points: a self-intersection has two CurveParams.
struct CurveParam {
    int seg = 0;
    Rat t{};
    bool operator==(const CurveParam&) const = default;
};

inline bool param_less(const CurveParam& a, const CurveParam& b) {
    return a.seg < b.seg || (a.seg == b.seg && a.t < b.t);
}

enum class Direction { Forward, Backward };

struct CurveLabel {
    std::string name;
    Point at;
};

// Closed piecewise-linear immersed curve. Segment i joins vertex i to
// vertex (i+1) mod size(); vertex 0 is not repeated.
struct Curve {
    std::vector<Point> verts;
    std::string name;
    std::vector<CurveLabel> labels;

    int size() const { return static_cast<int>(verts.size()); }
    const Point& vertex(int i) const { return verts[mod(i)]; }
    int mod(int i) const {
        int n = size();
        int m = i % n;
        return m < 0 ? m + n : m;
    }
    Vec seg_delta(int i) const { return vertex(i + 1) - vertex(mod(i)); }
    Point point_at(const CurveParam& p) const;

    // Linear position of a param on the circle, in [0, N).
    Rat linear_pos(const CurveParam& p) const { return Rat(mod(p.seg)) + p.t; }
    // Cyclic distance between params, in [0, N/2].
    Rat param_dist(const CurveParam& a, const CurveParam& b) const;
};

struct MorseSpec {
    enum Mode { None, Height, VertexValues } mode = None;
    std::vector<Rat> values;
};

struct CurveFile {
    Curve curve;
    MorseSpec morse;
};

// Parses the curve file format: `v <x> <y>` lines (rationals or decimals),
// optional `morse height` / `morse values v0 v1 ...`, optional
// `label <name> at <x> <y>`, `#` comments. Throws ParseError.
CurveFile parse_curve_file(const std::string& text);

// Inverse of parse_curve_file up to comments and whitespace.
std::string render_curve_file(const CurveFile& file);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void add(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// Checks the Curve invariants: closed (implicit), immersed (no repeated
// consecutive vertices, no cusps), and generic position (all self-crossings
// transverse and interior to segments, no triple points, no vertex on a
// non-adjacent segment).
ValidationReport validate_immersion(const Curve& c);

// Ordered polyline from a to b along the curve in the given direction.
// First point is point_at(a), last is point_at(b); throws on a == b.
std::vector<Point> arc_between(const Curve& c, const CurveParam& a, const CurveParam& b,
                               Direction dir);

}  // namespace floercx

#endif
