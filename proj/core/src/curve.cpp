#include "floercx/curve.hpp"

#include "floercx/errors.hpp"

#include <algorithm>
#include <sstream>

namespace floercx {

Point Curve::point_at(const CurveParam& p) const {
    int i = mod(p.seg);
    if (p.t < 0 || p.t >= 1) throw std::invalid_argument("CurveParam.t out of [0,1)");
    return vertex(i) + p.t * seg_delta(i);
}

Rat Curve::param_dist(const CurveParam& a, const CurveParam& b) const {
    Rat da = linear_pos(a), db = linear_pos(b);
    Rat d = abs(da - db);
    Rat n = Rat(size());
    return std::min(d, n - d);
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

Rat need_rat(const std::string& tok, int lineno, int col) {
    auto r = parse_rational(tok);
    if (!r) throw ParseError("expected rational number, got '" + tok + "'", lineno, col);
    return *r;
}

}  // namespace

CurveFile parse_curve_file(const std::string& text) {
    CurveFile file;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "v") {
            if (toks.size() != 3) throw ParseError("v line needs two coordinates", lineno, 1);
            Point p{need_rat(toks[1], lineno, 2), need_rat(toks[2], lineno, 3)};
            file.curve.verts.push_back(p);
        } else if (toks[0] == "name") {
            if (toks.size() != 2) throw ParseError("name line needs one token", lineno, 1);
            file.curve.name = toks[1];
        } else if (toks[0] == "morse") {
            if (toks.size() >= 2 && toks[1] == "height") {
                file.morse.mode = MorseSpec::Height;
            } else if (toks.size() >= 2 && toks[1] == "values") {
                file.morse.mode = MorseSpec::VertexValues;
                for (size_t i = 2; i < toks.size(); ++i)
                    file.morse.values.push_back(need_rat(toks[i], lineno, static_cast<int>(i)));
            } else {
                throw ParseError("morse line must be 'morse height' or 'morse values ...'", lineno, 1);
            }
        } else if (toks[0] == "label") {
            if (toks.size() != 5 || toks[2] != "at")
                throw ParseError("label line must be 'label <name> at <x> <y>'", lineno, 1);
            file.curve.labels.push_back(
                {toks[1], Point{need_rat(toks[3], lineno, 4), need_rat(toks[4], lineno, 5)}});
        } else {
            throw ParseError("unknown directive '" + toks[0] + "'", lineno, 1);
        }
    }
    if (file.curve.size() < 3)
        throw ParseError("curve needs at least 3 vertices, got " +
                         std::to_string(file.curve.size()));
    for (int i = 0; i < file.curve.size(); ++i) {
        if (file.curve.vertex(i) == file.curve.vertex(i + 1))
            throw ParseError("duplicate consecutive vertices at index " + std::to_string(i));
    }
    if (file.morse.mode == MorseSpec::VertexValues &&
        static_cast<int>(file.morse.values.size()) != file.curve.size())
        throw ParseError("morse values count does not match vertex count");
    return file;
}

std::string render_curve_file(const CurveFile& file) {
    std::ostringstream out;
    if (!file.curve.name.empty()) out << "name " << file.curve.name << "\n";
    for (const Point& p : file.curve.verts)
        out << "v " << rat_str(p.x) << " " << rat_str(p.y) << "\n";
    if (file.morse.mode == MorseSpec::Height) {
        out << "morse height\n";
    } else if (file.morse.mode == MorseSpec::VertexValues) {
        out << "morse values";
        for (const Rat& v : file.morse.values) out << " " << rat_str(v);
        out << "\n";
    }
    for (const CurveLabel& l : file.curve.labels)
        out << "label " << l.name << " at " << rat_str(l.at.x) << " " << rat_str(l.at.y) << "\n";
    return out.str();
}

ValidationReport validate_immersion(const Curve& c) {
    ValidationReport rep;
    int n = c.size();
    if (n < 3) {
        rep.add("fewer than 3 vertices");
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        if (c.vertex(i) == c.vertex(i + 1)) rep.add("duplicate consecutive vertices at " + std::to_string(i));
    }
    if (!rep.ok) return rep;
    for (int i = 0; i < n; ++i) {
        Vec a = c.seg_delta(i - 1), b = c.seg_delta(i);
        if (cross(a, b) == 0 && dot(a, b) < 0)
            rep.add("cusp (collinear reversal) at vertex " + std::to_string(i));
    }
    // Vertex on a non-adjacent segment.
    for (int i = 0; i < n; ++i) {
        for (int s = 0; s < n; ++s) {
            if (s == i || c.mod(s + 1) == i) continue;  // incident segments
            if (on_segment(c.vertex(i), c.vertex(s), c.vertex(s + 1)))
                rep.add("vertex " + std::to_string(i) + " lies on non-adjacent segment " +
                        std::to_string(s));
        }
    }
    // Pairwise segment checks: non-adjacent pairs must either miss each other
    // or cross transversally in both interiors; adjacent pairs share exactly
    // their common vertex.
    std::vector<Point> hits;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;  // shared-vertex contact; cusps reported above
            SegHit h = segment_intersect(c.vertex(i), c.vertex(i + 1), c.vertex(j), c.vertex(j + 1));
            if (h.kind == SegHit::Degenerate)
                rep.add("non-transverse contact between segments " + std::to_string(i) + " and " +
                        std::to_string(j) + " (" + h.note + ")");
            else if (h.kind == SegHit::Proper)
                hits.push_back(h.at);
        }
    }
    for (size_t a = 0; a < hits.size(); ++a)
        for (size_t b = a + 1; b < hits.size(); ++b)
            if (hits[a] == hits[b]) rep.add("triple point at " + point_str(hits[a]));
    return rep;
}

std::vector<Point> arc_between(const Curve& c, const CurveParam& a, const CurveParam& b,
                               Direction dir) {
    if (c.mod(a.seg) == c.mod(b.seg) && a.t == b.t)
        throw std::invalid_argument("arc_between: endpoints coincide");
    if (dir == Direction::Backward) {
        auto pts = arc_between(c, b, a, Direction::Forward);
        std::reverse(pts.begin(), pts.end());
        return pts;
    }
    int n = c.size();
    Rat start = c.linear_pos(a);
    Rat span = c.linear_pos(b) - start;
    if (span <= 0) span += n;
    std::vector<Point> pts;
    pts.push_back(c.point_at(a));
    Int k = numerator(start) / denominator(start) + 1;  // first vertex past a
    Rat stop = start + span;
    while (Rat(k) < stop) {
        pts.push_back(c.vertex(static_cast<int>(k % n)));
        ++k;
    }
    pts.push_back(c.point_at(b));
    std::vector<Point> out;
    for (const Point& p : pts)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    return out;
}

}  // namespace floercx
