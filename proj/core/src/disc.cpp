#include "floercx/disc.hpp"

#include "floercx/errors.hpp"

#include <algorithm>
#include <map>

namespace floercx {

namespace {

// Forward arc between cut positions: edge slots [ia, ib) cyclically, plus
// full wraps. Empty slices are only legal with wraps >= 1.
std::vector<int> arc_darts(const Arrangement& arr, int curve, int ia, int ib, bool forward,
                           int wraps) {
    const auto& list = arr.curve_edges[curve];
    int m = static_cast<int>(list.size());
    std::vector<int> darts;
    if (forward) {
        int steps = (ib - ia + m) % m + wraps * m;
        if (steps == 0) return darts;
        int k = ia;
        for (int s = 0; s < steps; ++s) {
            darts.push_back(2 * list[k % m]);
            k = (k + 1) % m;
        }
    } else {
        int steps = (ia - ib + m) % m + wraps * m;
        if (steps == 0) return darts;
        int k = (ia - 1 + m) % m;
        for (int s = 0; s < steps; ++s) {
            darts.push_back(2 * list[k] + 1);
            k = (k - 1 + m) % m;
        }
    }
    return darts;
}

std::vector<Point> darts_polyline(const Arrangement& arr, const std::vector<int>& darts) {
    std::vector<Point> pts;
    for (int d : darts) {
        const auto& ep = arr.edges[arr.dart_edge(d)].pts;
        if (arr.dart_fwd(d)) {
            for (const Point& p : ep)
                if (pts.empty() || !(pts.back() == p)) pts.push_back(p);
        } else {
            for (auto it = ep.rbegin(); it != ep.rend(); ++it)
                if (pts.empty() || !(pts.back() == *it)) pts.push_back(*it);
        }
    }
    return pts;
}

}  // namespace

std::optional<std::vector<int>> immersion_certificate(const Arrangement& arr,
                                                      const std::vector<int>& loop_darts,
                                                      const std::vector<Corner>& corners,
                                                      int max_w) {
    if (loop_darts.empty()) return std::nullopt;
    // Net boundary multiplicity per edge.
    std::map<int, int> mult;
    for (int d : loop_darts) mult[arr.dart_edge(d)] += arr.dart_fwd(d) ? 1 : -1;

    // Face labels from jump propagation; the loop is closed so the jumps are
    // globally consistent (w is its winding number function).
    std::vector<int> w(arr.n_faces, 0);
    std::vector<bool> seen(arr.n_faces, false);
    seen[arr.outer_face] = true;
    std::vector<int> queue = {arr.outer_face};
    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
            auto it = mult.find(e);
            int jump = (it == mult.end()) ? 0 : it->second;
            const auto& ed = arr.edges[e];
            if (ed.face_left == f && !seen[ed.face_right]) {
                w[ed.face_right] = w[f] - jump;
                seen[ed.face_right] = true;
                queue.push_back(ed.face_right);
            } else if (ed.face_right == f && !seen[ed.face_left]) {
                w[ed.face_left] = w[f] + jump;
                seen[ed.face_left] = true;
                queue.push_back(ed.face_left);
            }
        }
    }
    for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
        auto it = mult.find(e);
        int jump = (it == mult.end()) ? 0 : it->second;
        if (w[arr.edges[e].face_left] - w[arr.edges[e].face_right] != jump)
            return std::nullopt;  // inconsistent loop (should not happen for closed walks)
    }
    for (int f = 0; f < arr.n_faces; ++f) {
        if (w[f] < 0 || w[f] > max_w) return std::nullopt;
    }
    if (w[arr.outer_face] != 0) return std::nullopt;

    // Corner defect conditions: at degree-4 vertices the alternating sector
    // sum equals the signed count of corners there; elsewhere it must vanish.
    std::vector<int> expected(arr.verts.size(), 0);
    std::vector<int> corners_at(arr.verts.size(), 0);
    for (const Corner& c : corners) {
        if (c.vertex < 0 || c.sector < 0) return std::nullopt;
        expected[c.vertex] += (c.sector % 2 == 0) ? 1 : -1;
        corners_at[c.vertex] += 1;
    }
    for (size_t v = 0; v < arr.verts.size(); ++v) {
        const auto& vert = arr.verts[v];
        if (vert.darts.size() != 4) continue;
        int defect = 0;
        for (int i = 0; i < 4; ++i) {
            int val = w[vert.sector_face[i]];
            defect += (i % 2 == 0) ? val : -val;
        }
        if (defect != expected[v]) return std::nullopt;
    }

    // Combinatorial Gauss-Bonnet: the sheet-counted Euler characteristic of
    // the covered region must be that of a disc. This is what rules out
    // boundaries with extra full wraps (their Euler number exceeds 1).
    std::map<int, int> gross;
    for (int d : loop_darts) gross[arr.dart_edge(d)] += 1;
    long long chi4 = 0;
    for (int f = 0; f < arr.n_faces; ++f) chi4 += 4LL * w[f];
    for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
        auto it = gross.find(e);
        int b = (it == gross.end()) ? 0 : it->second;
        int wl = w[arr.edges[e].face_left], wr = w[arr.edges[e].face_right];
        // Full interior sheets over the open edge: boundary strands carry the
        // disc on one side only, so (wl + wr - b) must be an even nonnegative
        // count. Folded back-to-back strands fail here.
        if (wl + wr < b || (wl + wr - b) % 2 != 0) return std::nullopt;
        chi4 -= 2LL * (wl + wr + b);
    }
    for (size_t v = 0; v < arr.verts.size(); ++v) {
        const auto& vert = arr.verts[v];
        long long sectors = 0;
        for (int f : vert.sector_face) sectors += w[f];
        long long ends = 0;  // boundary strand ends incident to v
        for (int d : vert.darts) {
            auto it = gross.find(arr.dart_edge(d));
            if (it != gross.end()) ends += it->second;
        }
        if (ends % 2 != 0) return std::nullopt;
        long long visits = ends / 2;
        long long c = corners_at[v];
        long long p = visits - c;
        if (p < 0) return std::nullopt;
        if (vert.darts.size() == 4) {
            long long interior4 = sectors - 2 * p - 3 * c + 2 * c;  // = sum - 2p - c
            if (interior4 < 0 || interior4 % 4 != 0) return std::nullopt;
            chi4 += sectors + 2 * p + 3 * c;
        } else {
            if (c != 0) return std::nullopt;
            long long interior2 = sectors - p;
            if (interior2 < 0 || interior2 % 2 != 0) return std::nullopt;
            chi4 += 2 * (sectors + p);
        }
    }
    if (chi4 != 4) return std::nullopt;
    return w;
}

Corner classify_corner(const Curve& c, const std::vector<SelfIntersection>& sis,
                       const CurveParam& inc, const CurveParam& out) {
    Point pi = c.point_at(inc), po = c.point_at(out);
    if (!(pi == po)) throw std::invalid_argument("classify_corner: lifts have distinct images");
    Corner corner;
    corner.at = pi;
    corner.lift_arc1 = inc;
    corner.lift_arc2 = out;
    bool same_param = c.mod(inc.seg) == c.mod(out.seg) && inc.t == out.t;
    if (same_param) {
        corner.switching = false;
        corner.convex = true;  // marked point on a smooth boundary run
        return corner;
    }
    bool at_si = false;
    for (const auto& si : sis) {
        if (si.at == pi) at_si = true;
    }
    if (!at_si)
        throw std::invalid_argument(
            "classify_corner: distinct lifts at a point that is not a self-intersection");
    corner.switching = true;
    // Convexity for the disc-on-the-left convention: the ccw wedge from the
    // outgoing direction to the reversed incoming direction spans less than
    // the angle to the next branch ray.
    Vec t_in = c.seg_delta(inc.seg);
    Vec t_out = c.seg_delta(out.seg);
    Vec rev_in = Vec{} - t_in;
    // Convex iff no branch ray lies strictly inside the ccw wedge (t_out, rev_in).
    auto inside = [&](const Vec& r) {
        // r strictly inside ccw wedge from a to b
        const Vec& a = t_out;
        const Vec& b = rev_in;
        if (cross(a, b) > 0) return cross(a, r) > 0 && cross(r, b) > 0;
        return cross(a, r) > 0 || cross(r, b) > 0;
    };
    corner.convex = true;
    for (const auto& si : sis) {
        if (!(si.at == pi)) continue;
        for (const CurveParam& br : {si.p, si.q}) {
            for (const Vec& ray : {c.seg_delta(br.seg), Vec{} - c.seg_delta(br.seg)}) {
                Vec tt = ray;
                if (cross(t_out, tt) == 0 && dot(t_out, tt) > 0) continue;
                if (cross(rev_in, tt) == 0 && dot(rev_in, tt) > 0) continue;
                if (inside(tt)) corner.convex = false;
            }
        }
    }
    return corner;
}

namespace {

// Builds the corner record for a walk junction: the loop arrives via
// `dart_in` and departs via `dart_out` at the same vertex.
std::optional<Corner> make_corner(const Arrangement& arr, Corner::Role role, int dart_in,
                                  int dart_out, const CurveParam& lift1, const CurveParam& lift2,
                                  bool switching) {
    int v = arr.dart_head(dart_in);
    if (arr.dart_tail(dart_out) != v) throw std::logic_error("corner darts do not meet");
    Corner c;
    c.role = role;
    c.vertex = v;
    c.at = arr.verts[v].at;
    c.lift_arc1 = lift1;
    c.lift_arc2 = lift2;
    c.switching = switching;
    const auto& darts = arr.verts[v].darts;
    int deg = static_cast<int>(darts.size());
    int slot_out = -1;
    for (int i = 0; i < deg; ++i)
        if (darts[i] == dart_out) slot_out = i;
    if (slot_out < 0) throw std::logic_error("outgoing dart missing at corner");
    // Convex iff the ccw-next ray after the outgoing dart is the reversed
    // incoming dart: the interior wedge is then a single sector.
    c.convex = darts[(slot_out + 1) % deg] == arr.dart_rev(dart_in);
    c.sector = slot_out;
    if (!c.convex) return std::nullopt;
    return c;
}

// A corner wedge is a sliver when its sector face has different windings
// with respect to the two curves; these are the cells that collapse onto the
// curve as epsilon -> 0.
bool corner_is_sliver(const Arrangement& arr, const Corner& c) {
    int f = arr.verts[c.vertex].sector_face[c.sector];
    return arr.winding[f][0] != arr.winding[f][1];
}

bool corner_at_critical_crossing(const Arrangement& arr, const Corner& c) {
    const auto& vert = arr.verts[c.vertex];
    return vert.kind == Arrangement::Vertex::Crossing && arr.crossings[vert.index].vertex_a;
}

struct WalkCandidate {
    std::vector<int> arc1, arc2;
};

std::vector<Bigon> certify(const Arrangement& arr, const WalkCandidate& wc, Corner in_corner,
                           Corner out_corner, const DiscSearchCfg& cfg, bool teardrop,
                           int mark_curve, const CurveParam& mark) {
    std::vector<Bigon> out;
    std::vector<int> loop = wc.arc1;
    loop.insert(loop.end(), wc.arc2.begin(), wc.arc2.end());
    std::vector<Corner> vertex_corners;
    for (const Corner& c : {in_corner, out_corner})
        if (c.vertex >= 0) vertex_corners.push_back(c);  // marked points are not corners
    auto w = immersion_certificate(arr, loop, vertex_corners, cfg.max_w);
    if (!w) return out;
    Bigon b;
    b.corner_in = in_corner;
    b.corner_out = out_corner;
    b.arc1_darts = wc.arc1;
    b.arc2_darts = wc.arc2;
    b.arc_bottom = darts_polyline(arr, wc.arc1);
    b.arc_top = darts_polyline(arr, wc.arc2);
    b.winding = *w;
    if (!teardrop) {
        out.push_back(std::move(b));
        return out;
    }
    // Teardrop: one marked pass of the constant Morse part per occurrence of
    // the mark's edge. arc1 was built as the full loop, arc2 empty.
    int mark_edge = arr.edge_containing(mark_curve, mark);
    int occurrences = 0;
    for (int d : loop)
        if (arr.dart_edge(d) == mark_edge) ++occurrences;
    for (int occ = 0; occ < occurrences; ++occ) {
        Bigon bb = b;
        bb.has_mark = true;
        bb.mark = mark;
        bb.mark_occurrence = occ;
        // Split the loop at the occurrence for the reported arcs.
        int count = 0;
        size_t split = 0;
        for (size_t i = 0; i < loop.size(); ++i) {
            if (arr.dart_edge(loop[i]) == mark_edge && count++ == occ) {
                split = i;
                break;
            }
        }
        bb.arc1_darts.assign(loop.begin(), loop.begin() + split + 1);
        bb.arc2_darts.assign(loop.begin() + split, loop.end());
        bb.arc_bottom = darts_polyline(arr, bb.arc1_darts);
        bb.arc_top = darts_polyline(arr, bb.arc2_darts);
        out.push_back(std::move(bb));
    }
    return out;
}

}  // namespace

std::vector<Bigon> bigons_two_curves(const Arrangement& arr, int x_crossing, int y_crossing,
                                     const DiscSearchCfg& cfg) {
    if (arr.ncurves() != 2) throw std::invalid_argument("bigons_two_curves: need two curves");
    const CrossPoint& x = arr.crossings[x_crossing];
    const CrossPoint& y = arr.crossings[y_crossing];
    int ia0 = arr.cut_position(0, y.on_a), ib0 = arr.cut_position(0, x.on_a);
    int ia1 = arr.cut_position(1, x.on_b), ib1 = arr.cut_position(1, y.on_b);
    std::vector<Bigon> out;
    for (bool f1 : {true, false}) {
        for (int k1 = 0; k1 <= cfg.max_wraps; ++k1) {
            auto arc1 = arc_darts(arr, 0, ia0, ib0, f1, k1);
            if (arc1.empty()) continue;
            for (bool f2 : {true, false}) {
                for (int k2 = 0; k2 <= cfg.max_wraps; ++k2) {
                    auto arc2 = arc_darts(arr, 1, ia1, ib1, f2, k2);
                    if (arc2.empty()) continue;
                    auto cin = make_corner(arr, Corner::Input, arc1.back(), arc2.front(), x.on_a,
                                           x.on_b, false);
                    if (!cin) continue;
                    auto cout = make_corner(arr, Corner::Output, arc2.back(), arc1.front(),
                                            y.on_a, y.on_b, false);
                    if (!cout) continue;
                    // A disc cornered at two critical crossings limits onto a
                    // pure Morse trajectory, so both ends must be thin; a fat
                    // wedge at a critical crossing is only possible for the
                    // constant-trajectory end of a disc whose other corner
                    // switches branches at a self-intersection.
                    if (corner_at_critical_crossing(arr, *cin) &&
                        corner_at_critical_crossing(arr, *cout)) {
                        if (!corner_is_sliver(arr, *cin) || !corner_is_sliver(arr, *cout))
                            continue;
                    }
                    auto found = certify(arr, {arc1, arc2}, *cin, *cout, cfg, false, 0, {});
                    for (auto& b : found) out.push_back(std::move(b));
                }
            }
        }
    }
    return out;
}

std::vector<Bigon> bigons_one_curve(const Arrangement& arr, const PearlCorner& x,
                                    const PearlCorner& y,
                                    const std::vector<CriticalPoint>& crits,
                                    const DiscSearchCfg& cfg) {
    if (arr.ncurves() != 1) throw std::invalid_argument("bigons_one_curve: need one curve");
    const auto& sis = arr.sis[0];
    std::vector<Bigon> out;
    if (x.kind == PearlCorner::Crit && y.kind == PearlCorner::Crit) return out;

    auto si_lift = [&](int si, bool first_of_pair, bool order_pq) -> CurveParam {
        const SelfIntersection& s = sis[si];
        bool take_p = (first_of_pair == order_pq);
        return take_p ? s.p : s.q;
    };

    if (x.kind == PearlCorner::Crit) {
        // Type 2: constant Morse part at an index-0 critical point, output
        // corner switching with the prescribed order.
        if (crits[x.crit].index != 0)
            throw std::invalid_argument(
                "Type 2 input must have index 0: higher-index pearly discs have positive-"
                "dimensional moduli");
        CurveParam dep = si_lift(y.si, true, y.order_pq);
        CurveParam arrv = si_lift(y.si, false, y.order_pq);
        CurveParam mark = crits[x.crit].param;
        int idep = arr.cut_position(0, dep), iarr = arr.cut_position(0, arrv);
        for (bool fwd : {true, false}) {
            for (int k = 0; k <= cfg.max_wraps; ++k) {
                auto path = arc_darts(arr, 0, idep, iarr, fwd, k);
                if (path.empty()) continue;
                auto cout = make_corner(arr, Corner::Output, path.back(), path.front(), dep, arrv,
                                        true);
                if (!cout) continue;
                Corner cin;  // marked point, not an arrangement vertex: no defect entry
                cin.role = Corner::Input;
                cin.at = arr.curves[0].point_at(mark);
                cin.lift_arc1 = cin.lift_arc2 = mark;
                cin.switching = false;
                cin.convex = true;
                cin.vertex = -1;
                auto found =
                    certify(arr, {path, {}}, cin, *cout, cfg, true, 0, mark);
                for (auto& b : found) out.push_back(std::move(b));
            }
        }
        return out;
    }
    if (y.kind == PearlCorner::Crit) {
        // Type 3: switching input with prescribed order, constant Morse part
        // into an index-1 critical point.
        if (crits[y.crit].index != 1)
            throw std::invalid_argument(
                "Type 3 output must have index 1: lower-index pearly discs have positive-"
                "dimensional moduli");
        CurveParam arrv = si_lift(x.si, true, x.order_pq);
        CurveParam dep = si_lift(x.si, false, x.order_pq);
        CurveParam mark = crits[y.crit].param;
        int idep = arr.cut_position(0, dep), iarr = arr.cut_position(0, arrv);
        for (bool fwd : {true, false}) {
            for (int k = 0; k <= cfg.max_wraps; ++k) {
                auto path = arc_darts(arr, 0, idep, iarr, fwd, k);
                if (path.empty()) continue;
                auto cin = make_corner(arr, Corner::Input, path.back(), path.front(), arrv, dep,
                                       true);
                if (!cin) continue;
                Corner cout;
                cout.role = Corner::Output;
                cout.at = arr.curves[0].point_at(mark);
                cout.lift_arc1 = cout.lift_arc2 = mark;
                cout.switching = false;
                cout.convex = true;
                cout.vertex = -1;
                auto found = certify(arr, {path, {}}, *cin, cout, cfg, true, 0, mark);
                for (auto& b : found) out.push_back(std::move(b));
            }
        }
        return out;
    }
    // Type 4: both corners switching.
    CurveParam out_dep = si_lift(y.si, true, y.order_pq);
    CurveParam out_arr = si_lift(y.si, false, y.order_pq);
    CurveParam in_arr = si_lift(x.si, true, x.order_pq);
    CurveParam in_dep = si_lift(x.si, false, x.order_pq);
    int i1a = arr.cut_position(0, out_dep), i1b = arr.cut_position(0, in_arr);
    int i2a = arr.cut_position(0, in_dep), i2b = arr.cut_position(0, out_arr);
    for (bool f1 : {true, false}) {
        for (int k1 = 0; k1 <= cfg.max_wraps; ++k1) {
            auto arc1 = arc_darts(arr, 0, i1a, i1b, f1, k1);
            if (arc1.empty()) continue;
            for (bool f2 : {true, false}) {
                for (int k2 = 0; k2 <= cfg.max_wraps; ++k2) {
                    auto arc2 = arc_darts(arr, 0, i2a, i2b, f2, k2);
                    if (arc2.empty()) continue;
                    auto cin = make_corner(arr, Corner::Input, arc1.back(), arc2.front(), in_arr,
                                           in_dep, true);
                    if (!cin) continue;
                    auto cout = make_corner(arr, Corner::Output, arc2.back(), arc1.front(),
                                            out_dep, out_arr, true);
                    if (!cout) continue;
                    auto found = certify(arr, {arc1, arc2}, *cin, *cout, cfg, false, 0, {});
                    for (auto& b : found) out.push_back(std::move(b));
                }
            }
        }
    }
    return out;
}

}  // namespace floercx
