#include "floercx/geometry.hpp"

#include <algorithm>
#include <vector>

namespace floercx {

std::string point_str(const Point& p) {
    return "(" + rat_str(p.x) + ", " + rat_str(p.y) + ")";
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    Vec d = b - a;
    Rat proj = dot(p - a, d);
    return proj >= 0 && proj <= dot(d, d);
}

bool on_segment_interior(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    Vec d = b - a;
    Rat proj = dot(p - a, d);
    return proj > 0 && proj < dot(d, d);
}

SegHit segment_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    SegHit hit;
    Vec r = a2 - a1, s = b2 - b1;
    Rat denom = cross(r, s);
    Vec qp = b1 - a1;
    if (denom == 0) {
        if (cross(qp, r) != 0) return hit;  // parallel, disjoint lines
        // Collinear: overlap or touch?
        Rat rr = dot(r, r);
        Rat t0 = dot(qp, r), t1 = dot(b2 - a1, r);
        if (t0 > t1) std::swap(t0, t1);
        if (t1 < 0 || t0 > rr) return hit;
        hit.kind = SegHit::Degenerate;
        hit.note = "collinear contact";
        return hit;
    }
    Rat s_par = cross(qp, s) / denom;
    Rat t_par = cross(qp, r) / denom;
    if (s_par < 0 || s_par > 1 || t_par < 0 || t_par > 1) return hit;
    hit.at = a1 + s_par * r;
    hit.s = s_par;
    hit.t = t_par;
    if (s_par > 0 && s_par < 1 && t_par > 0 && t_par < 1) {
        hit.kind = SegHit::Proper;
    } else {
        hit.kind = SegHit::Degenerate;
        hit.note = "endpoint contact";
    }
    return hit;
}

Rat linf_dist_point_point(const Point& a, const Point& b) {
    Rat dx = abs(a.x - b.x), dy = abs(a.y - b.y);
    return std::max(dx, dy);
}

namespace {

Rat linf_at(const Point& p, const Point& a, const Vec& d, const Rat& t) {
    Point q = a + t * d;
    return linf_dist_point_point(p, q);
}

}  // namespace

Rat linf_dist_point_seg(const Point& p, const Point& a, const Point& b) {
    Vec d = b - a;
    std::vector<Rat> cands = {Rat(0), Rat(1)};
    // Kinks of t -> max(|fx(t)|, |fy(t)|) where fx, fy are affine: the zeros of
    // fx, fy and the balance points fx = +-fy.
    Rat fx0 = p.x - a.x, fy0 = p.y - a.y;  // f(t) = f0 - t*d
    auto add_root = [&](const Rat& num, const Rat& den) {
        if (den == 0) return;
        Rat t = num / den;
        if (t > 0 && t < 1) cands.push_back(t);
    };
    add_root(fx0, d.x);
    add_root(fy0, d.y);
    add_root(fx0 - fy0, d.x - d.y);
    add_root(fx0 + fy0, d.x + d.y);
    Rat best = linf_at(p, a, d, cands[0]);
    for (size_t i = 1; i < cands.size(); ++i) best = std::min(best, linf_at(p, a, d, cands[i]));
    return best;
}

Rat linf_dist_seg_seg(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    SegHit hit = segment_intersect(a1, a2, b1, b2);
    if (hit.kind != SegHit::None) return Rat(0);
    Rat best = linf_dist_point_seg(a1, b1, b2);
    best = std::min(best, linf_dist_point_seg(a2, b1, b2));
    best = std::min(best, linf_dist_point_seg(b1, a1, a2));
    best = std::min(best, linf_dist_point_seg(b2, a1, a2));
    return best;
}

int dir_half(const Vec& v) {
    // 0: strictly above the x axis, or on the +x axis; 1: below, or on -x.
    if (v.y > 0) return 0;
    if (v.y < 0) return 1;
    return v.x > 0 ? 0 : 1;
}

bool dir_ccw_less(const Vec& a, const Vec& b) {
    int ha = dir_half(a), hb = dir_half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

}  // namespace floercx
