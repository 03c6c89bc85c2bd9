#include "floercx/morse.hpp"

#include "floercx/errors.hpp"
#include "floercx/intersect.hpp"

namespace floercx {

MorseFunction MorseFunction::from_spec(const MorseSpec& spec) {
    MorseFunction f;
    if (spec.mode == MorseSpec::VertexValues) {
        f.mode = MorseSpec::VertexValues;
        f.values = spec.values;
    } else {
        f.mode = MorseSpec::Height;
    }
    return f;
}

Rat MorseFunction::at_vertex(const Curve& c, int i) const {
    if (mode == MorseSpec::VertexValues) return values[c.mod(i)];
    return -c.vertex(i).y;
}

Rat MorseFunction::seg_df(const Curve& c, int i) const {
    return at_vertex(c, i + 1) - at_vertex(c, c.mod(i));
}

Rat MorseFunction::at_param(const Curve& c, const CurveParam& p) const {
    int i = c.mod(p.seg);
    return at_vertex(c, i) + p.t * seg_df(c, i);
}

MorseFunction MorseFunction::scaled(const Curve& c, const Rat& a) const {
    MorseFunction f;
    f.mode = MorseSpec::VertexValues;
    f.values.reserve(c.size());
    for (int i = 0; i < c.size(); ++i) f.values.push_back(a * at_vertex(c, i));
    return f;
}

std::vector<CriticalPoint> critical_points(const Curve& c, const MorseFunction& f) {
    int n = c.size();
    for (int i = 0; i < n; ++i) {
        if (f.seg_df(c, i) == 0)
            throw GenericityError("PL-Morse violation: level segment " + std::to_string(i) +
                                  (f.mode == MorseSpec::Height ? " (horizontal edge)" : ""));
    }
    std::vector<CriticalPoint> crits;
    for (int i = 0; i < n; ++i) {
        int before = sgn(f.seg_df(c, i - 1));
        int after = sgn(f.seg_df(c, i));
        if (before == after) continue;
        CriticalPoint cp;
        cp.vertex = i;
        cp.param = CurveParam{i, Rat(0)};
        cp.index = (before < 0 && after > 0) ? 0 : 1;  // valley of f vs peak of f
        cp.value = f.at_vertex(c, i);
        for (const CurveLabel& l : c.labels)
            if (l.at == c.vertex(i)) cp.label = l.name;
        crits.push_back(cp);
    }
    return crits;
}

ValidationReport validate_morse(const Curve& c, const MorseFunction& f,
                                const std::vector<SelfIntersection>& sis) {
    ValidationReport rep;
    int n = c.size();
    if (f.mode == MorseSpec::VertexValues && static_cast<int>(f.values.size()) != n) {
        rep.add("morse values count does not match vertex count");
        return rep;
    }
    for (int i = 0; i < n; ++i)
        if (f.seg_df(c, i) == 0) rep.add("level segment " + std::to_string(i));
    if (!rep.ok) return rep;
    auto crits = critical_points(c, f);
    if (crits.size() % 2 != 0) rep.add("odd number of critical points");
    for (const auto& cp : crits) {
        for (const auto& si : sis) {
            if (c.point_at(si.p) == c.vertex(cp.vertex))
                rep.add("critical point at vertex " + std::to_string(cp.vertex) +
                        " coincides with a self-intersection");
        }
    }
    return rep;
}

std::vector<GradientArc> rigid_trajectories(const Curve& c, const MorseFunction& f) {
    auto crits = critical_points(c, f);
    std::vector<GradientArc> arcs;
    int m = static_cast<int>(crits.size());
    if (m == 0) return arcs;
    for (int k = 0; k < m; ++k) {
        const CriticalPoint& cur = crits[k];
        const CriticalPoint& nxt = crits[(k + 1) % m];
        GradientArc arc;
        if (cur.index == 1) {
            // f decreases along the curve from cur to nxt
            arc.from_cp = k;
            arc.to_cp = (k + 1) % m;
            arc.dir = Direction::Forward;
            arc.pts = arc_between(c, cur.param, nxt.param, Direction::Forward);
        } else {
            arc.from_cp = (k + 1) % m;
            arc.to_cp = k;
            arc.dir = Direction::Backward;
            arc.pts = arc_between(c, nxt.param, cur.param, Direction::Backward);
        }
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

}  // namespace floercx
