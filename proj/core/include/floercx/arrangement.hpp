#ifndef FLOERCX_ARRANGEMENT_HPP
#define FLOERCX_ARRANGEMENT_HPP

#include "floercx/curve.hpp"
#include "floercx/intersect.hpp"

#include <array>
#include <string>
#include <vector>

namespace floercx {

// Planar subdivision induced by one or two curves in generic position.
// Vertices are the crossing points (self-intersections and curve-curve
// crossings); edges are the maximal crossing-free arcs between them; faces
// carry a winding number per input curve. Darts are directed edges, id
// 2*edge (forward) and 2*edge+1 (backward).
struct Arrangement {
    struct Vertex {
        Point at{};
        enum Kind { SelfIx, Crossing, Anchor } kind = Anchor;
        int curve = -1;  // for SelfIx
        int index = -1;  // index into sis[curve] or crossings
        std::vector<int> darts;        // outgoing darts in ccw order
        std::vector<int> sector_face;  // sector i: ccw between darts[i] and darts[i+1]
    };
    struct Edge {
        int curve = 0;
        CurveParam from{}, to{};
        std::vector<Point> pts;  // from point_at(from) to point_at(to)
        int v_from = -1, v_to = -1;
        int face_left = -1, face_right = -1;
    };

    std::vector<Curve> curves;
    std::vector<std::vector<SelfIntersection>> sis;
    std::vector<CrossPoint> crossings;  // only in the two-curve case

    std::vector<Vertex> verts;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> curve_edges;  // per curve, cyclic in param order
    int n_faces = 0;
    int outer_face = -1;
    std::vector<std::array<int, 2>> winding;  // per face, per curve

    int ncurves() const { return static_cast<int>(curves.size()); }
    int dart_edge(int d) const { return d >> 1; }
    bool dart_fwd(int d) const { return (d & 1) == 0; }
    int dart_rev(int d) const { return d ^ 1; }
    int dart_tail(int d) const {
        const Edge& e = edges[d >> 1];
        return dart_fwd(d) ? e.v_from : e.v_to;
    }
    int dart_head(int d) const { return dart_tail(d ^ 1); }
    Vec dart_out_dir(int d) const;
    int face_left_of(int d) const {
        const Edge& e = edges[d >> 1];
        return dart_fwd(d) ? e.face_left : e.face_right;
    }
    int face_right_of(int d) const { return face_left_of(d ^ 1); }

    // Index of a dart in its tail vertex's ccw list.
    int dart_slot(int d) const;
    // Next boundary dart when tracing the face on the left.
    int next_on_face(int d) const;

    // Edge of the given curve whose open param interval contains p
    // (p must not be a cut point).
    int edge_containing(int curve, const CurveParam& p) const;
    // Position of a cut param in curve_edges order: returns k such that
    // curve_edges[curve][k] starts at p. Throws if p is not a cut point.
    int cut_position(int curve, const CurveParam& p) const;

    std::string dump() const;
};

Arrangement build_arrangement(const Curve& c);
Arrangement build_arrangement(const Curve& black, const Curve& red);

}  // namespace floercx

#endif
