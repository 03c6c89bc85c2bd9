#ifndef FLOERCX_GEOMETRY_HPP
#define FLOERCX_GEOMETRY_HPP

#include "floercx/rational.hpp"

#include <compare>
#include <string>

namespace floercx {

struct Point {
    Rat x, y;
    bool operator==(const Point&) const = default;
};

using Vec = Point;

inline Vec operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator+(const Point& a, const Vec& v) { return {a.x + v.x, a.y + v.y}; }
inline Vec operator*(const Rat& s, const Vec& v) { return {s * v.x, s * v.y}; }
inline bool point_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

inline Rat cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y; }

// Sign of the turn a->b->c: +1 left, -1 right, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
    return sgn(cross(b - a, c - a));
}

std::string point_str(const Point& p);

// p on the closed segment [a,b] (segment may not be degenerate).
bool on_segment(const Point& p, const Point& a, const Point& b);
// p in the open segment (a,b).
bool on_segment_interior(const Point& p, const Point& a, const Point& b);

struct SegHit {
    enum Kind { None, Proper, Degenerate } kind = None;
    Point at{};
    Rat s{}, t{};        // a1 + s*(a2-a1) = b1 + t*(b2-b1) when kind != None
    std::string note;    // reason for Degenerate
};

// Exact intersection of segments [a1,a2] and [b1,b2]. Proper means the
// crossing is transverse and interior to both segments; endpoint contact and
// collinear overlap are reported as Degenerate.
SegHit segment_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

// Chebyshev (L-inf) distances; exact rationals, homogeneous of degree 1.
Rat linf_dist_point_point(const Point& a, const Point& b);
Rat linf_dist_point_seg(const Point& p, const Point& a, const Point& b);
Rat linf_dist_seg_seg(const Point& a1, const Point& a2, const Point& b1, const Point& b2);

// Total counterclockwise angular order of nonzero direction vectors, starting
// just above the +x axis. Ties (parallel same-direction vectors) compare equal.
int dir_half(const Vec& v);
bool dir_ccw_less(const Vec& a, const Vec& b);

}  // namespace floercx

#endif
