#ifndef FLOERCX_DISC_HPP
#define FLOERCX_DISC_HPP

#include "floercx/arrangement.hpp"
#include "floercx/morse.hpp"

#include <optional>
#include <vector>

namespace floercx {

struct DiscSearchCfg {
    int max_w = 4;      // face labels above this are out of the model's scope
    int max_wraps = 4;  // extra full turns allowed per boundary arc
};

// Disc corner at an arrangement vertex. The boundary loop arrives along one
// dart and leaves along another; convexity means the interior sector between
// them is a single angular sector of the vertex.
struct Corner {
    enum Role { Input, Output } role = Input;
    int vertex = -1;
    Point at{};
    // Lift limits on the parametrizing circle(s). For the output corner the
    // pair reads (departure, arrival); for the input corner (arrival,
    // departure). This matches the theta -> 0+/0- and pi-/pi+ boundary-lift
    // limits of the two boundary arcs.
    CurveParam lift_arc1{}, lift_arc2{};
    bool switching = false;
    bool convex = false;
    int sector = -1;  // sector slot of the interior wedge at the vertex
};

// Combinatorial certificate of a rigid disc: a closed boundary walk on the
// arrangement with two convex corners, together with the nonnegative face
// winding it induces. arc1 is the bottom boundary (the original curve in the
// two-curve case); arc2 the top (pushoff).
struct Bigon {
    Corner corner_in, corner_out;
    std::vector<int> arc1_darts, arc2_darts;
    std::vector<Point> arc_bottom, arc_top;
    std::vector<int> winding;  // per arrangement face
    bool has_mark = false;     // teardrops: pass-through point of the constant
    CurveParam mark{};         // Morse part (Types 2 and 3)
    int mark_occurrence = 0;   // which pass of the mark's edge carries it
};

// Checks the winding certificate for a closed dart loop: w >= 0 everywhere,
// zero on the unbounded face, edge jumps matching the walk's net multiplicity,
// corner defects +1 exactly in the prescribed sectors and 0 at every other
// vertex. Returns the face labels, or nullopt if any condition fails.
// Labels above max_w also fail (out of the bounded search space).
std::optional<std::vector<int>> immersion_certificate(const Arrangement& arr,
                                                      const std::vector<int>& loop_darts,
                                                      const std::vector<Corner>& corners,
                                                      int max_w = 4);

// Standalone corner classifier: switching iff the two lifts are distinct
// parameters with the same image point. Convexity is evaluated for the
// disc-on-the-left convention.
Corner classify_corner(const Curve& c, const std::vector<SelfIntersection>& sis,
                       const CurveParam& inc, const CurveParam& out);

// All certified bigons between two crossings of a two-curve arrangement,
// input corner at x, output at y.
std::vector<Bigon> bigons_two_curves(const Arrangement& arr, int x_crossing, int y_crossing,
                                     const DiscSearchCfg& cfg = {});

// Corner specification for the one-curve (pearly) disc queries.
struct PearlCorner {
    enum Kind { Crit, Pair } kind = Crit;
    int crit = -1;      // index into the critical point list
    int si = -1;        // index into the self-intersection list
    bool order_pq = true;  // (p,q) vs (q,p)
};

// Pearly disc enumeration on a one-curve arrangement: Type 2 (crit -> pair),
// Type 3 (pair -> crit), Type 4 (pair -> pair). Critical endpoints must obey
// the index pruning (inputs index 0, outputs index 1); anything else throws.
std::vector<Bigon> bigons_one_curve(const Arrangement& arr, const PearlCorner& x,
                                    const PearlCorner& y,
                                    const std::vector<CriticalPoint>& crits,
                                    const DiscSearchCfg& cfg = {});

}  // namespace floercx

#endif
