#include "floercx/intersect.hpp"

#include "floercx/errors.hpp"

#include <algorithm>
#include <map>

namespace floercx {

std::vector<SelfIntersection> self_intersections(const Curve& c) {
    int n = c.size();
    std::vector<SelfIntersection> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            SegHit h = segment_intersect(c.vertex(i), c.vertex(i + 1), c.vertex(j), c.vertex(j + 1));
            if (adjacent) continue;  // shared-vertex contact is legal, crossings impossible
            if (h.kind == SegHit::None) continue;
            if (h.kind == SegHit::Degenerate)
                throw GenericityError("non-transverse self-contact between segments " +
                                      std::to_string(i) + " and " + std::to_string(j) + " at " +
                                      point_str(h.at) + " (" + h.note + ")");
            SelfIntersection si;
            si.at = h.at;
            si.p = CurveParam{i, h.s};
            si.q = CurveParam{j, h.t};
            for (const CurveLabel& l : c.labels)
                if (l.at == h.at) si.label = l.name;
            out.push_back(std::move(si));
        }
    }
    for (size_t a = 0; a < out.size(); ++a)
        for (size_t b = a + 1; b < out.size(); ++b)
            if (out[a].at == out[b].at)
                throw GenericityError("triple point at " + point_str(out[a].at));
    std::sort(out.begin(), out.end(), [](const SelfIntersection& x, const SelfIntersection& y) {
        return param_less(x.p, y.p);
    });
    return out;
}

namespace {

struct RawHit {
    int seg_a, seg_b;
    Rat s, t;
};

struct PointCmp {
    bool operator()(const Point& a, const Point& b) const { return point_less(a, b); }
};

// Does the straight line through v with direction w cross the corner of the
// curve at vertex vi? True iff the two branch rays leave v on opposite sides.
void check_vertex_crossing(const Curve& c, int vi, const Vec& w, const Point& at) {
    Vec r_in = Vec{} - c.seg_delta(vi - 1);  // away from v along the incoming segment
    Vec r_out = c.seg_delta(vi);
    int s1 = sgn(cross(w, r_in));
    int s2 = sgn(cross(w, r_out));
    if (s1 == 0 || s2 == 0)
        throw GenericityError("collinear contact at curve vertex " + point_str(at));
    if (s1 == s2)
        throw GenericityError("tangential (non-crossing) contact at curve vertex " +
                              point_str(at));
}

}  // namespace

std::vector<CrossPoint> curve_intersections(const Curve& a, const Curve& b) {
    std::map<Point, std::vector<RawHit>, PointCmp> by_loc;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) {
            SegHit h =
                segment_intersect(a.vertex(i), a.vertex(i + 1), b.vertex(j), b.vertex(j + 1));
            if (h.kind == SegHit::None) continue;
            if (h.kind == SegHit::Degenerate && h.note == "collinear contact")
                throw GenericityError("curves share a collinear arc near segments " +
                                      std::to_string(i) + "/" + std::to_string(j));
            by_loc[h.at].push_back(RawHit{i, j, h.s, h.t});
        }
    }
    std::vector<CrossPoint> out;
    for (auto& [loc, hits] : by_loc) {
        // Normalize parameters so t=1 endpoints become (seg+1, 0).
        auto norm = [](const Curve& c, int seg, const Rat& t) -> CurveParam {
            if (t == 1) return CurveParam{c.mod(seg + 1), Rat(0)};
            return CurveParam{c.mod(seg), t};
        };
        std::vector<CurveParam> pa, pb;
        for (const RawHit& h : hits) {
            CurveParam qa = norm(a, h.seg_a, h.s), qb = norm(b, h.seg_b, h.t);
            if (std::find(pa.begin(), pa.end(), qa) == pa.end()) pa.push_back(qa);
            if (std::find(pb.begin(), pb.end(), qb) == pb.end()) pb.push_back(qb);
        }
        if (pa.size() > 1 || pb.size() > 1)
            throw GenericityError("triple point between curves at " + point_str(loc));
        CrossPoint cp;
        cp.at = loc;
        cp.on_a = pa[0];
        cp.on_b = pb[0];
        cp.vertex_a = (cp.on_a.t == 0);
        cp.vertex_b = (cp.on_b.t == 0);
        if (cp.vertex_a && cp.vertex_b)
            throw GenericityError("curves share a vertex at " + point_str(loc));
        if (cp.vertex_a) check_vertex_crossing(a, cp.on_a.seg, b.seg_delta(cp.on_b.seg), loc);
        if (cp.vertex_b) check_vertex_crossing(b, cp.on_b.seg, a.seg_delta(cp.on_a.seg), loc);
        cp.sign = sgn(cross(a.seg_delta(cp.on_a.seg), b.seg_delta(cp.on_b.seg)));
        out.push_back(std::move(cp));
    }
    std::sort(out.begin(), out.end(),
              [](const CrossPoint& x, const CrossPoint& y) { return param_less(x.on_a, y.on_a); });
    return out;
}

Rat reach_estimate(const Curve& c) {
    int n = c.size();
    Rat best(-1);
    auto consider = [&](const Rat& v) {
        if (v <= 0) return;
        if (best < 0 || v < best) best = v;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            SegHit h = segment_intersect(c.vertex(i), c.vertex(i + 1), c.vertex(j), c.vertex(j + 1));
            if (h.kind == SegHit::Proper) continue;  // the crossing pair itself is exempt
            Rat d = linf_dist_seg_seg(c.vertex(i), c.vertex(i + 1), c.vertex(j), c.vertex(j + 1));
            consider(d / 2);
        }
    }
    for (int i = 0; i < n; ++i) {
        Vec u = c.seg_delta(i - 1), v = c.seg_delta(i);
        Rat lu = std::max(abs(u.x), abs(u.y));
        Rat lv = std::max(abs(v.x), abs(v.y));
        Rat corner = abs(cross(u, v)) / (4 * (lu + lv));
        consider(corner);
    }
    if (best <= 0) throw GenericityError("reach_estimate: degenerate curve");
    return best;
}

}  // namespace floercx
