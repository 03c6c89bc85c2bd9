#include "floercx/pushoff.hpp"

#include "floercx/errors.hpp"
#include "floercx/identify.hpp"

#include <algorithm>

namespace floercx {

namespace {

// Intersection of the line through p with direction u and the line through q
// with direction v. Throws WindowError when parallel.
Point line_line(const Point& p, const Vec& u, const Point& q, const Vec& v) {
    Rat denom = cross(u, v);
    if (denom == 0) throw WindowError("pushoff: degenerate corner (parallel through-line)");
    Rat s = cross(q - p, v) / denom;
    return p + s * u;
}

}  // namespace

Curve construct_pushoff(const Curve& c, const MorseFunction& f, const PushoffConfig& cfg) {
    if (cfg.epsilon <= 0) throw WindowError("pushoff: epsilon must be positive");
    if (cfg.epsilon >= reach_estimate(c))
        throw WindowError("pushoff: epsilon exceeds the reach estimate");
    int n = c.size();
    std::vector<Vec> disp(n);
    std::vector<int> slope_sign(n);
    for (int i = 0; i < n; ++i) {
        Vec d = c.seg_delta(i);
        Rat df = f.seg_df(c, i);
        if (df == 0) throw GenericityError("pushoff: level segment " + std::to_string(i));
        slope_sign[i] = sgn(df);
        Rat len2 = dot(d, d);
        Vec normal{-d.y, d.x};  // left of the traversal
        disp[i] = (cfg.epsilon * df / len2) * normal;
        if (cfg.side == PushoffConfig::Right) disp[i] = Rat(-1) * disp[i];
    }
    Curve push;
    push.name = c.name.empty() ? "pushoff" : c.name + "_pushoff";
    for (int i = 0; i < n; ++i) {
        int prev = c.mod(i - 1);
        const Point& v = c.vertex(i);
        bool critical = slope_sign[prev] != slope_sign[i];
        if (critical) {
            // Straight pass through the critical point: the through-direction
            // a + b points into the wedge of the two branch rays, so the
            // pushoff crosses the curve transversally exactly at v.
            Vec a = Vec{} - c.seg_delta(prev);
            Vec b = c.seg_delta(i);
            Vec u = a + b;
            if (u.x == 0 && u.y == 0) u = Vec{-b.y, b.x};
            Point A = line_line(v, u, c.vertex(prev) + disp[prev], c.seg_delta(prev));
            Point B = line_line(v, u, v + disp[i], c.seg_delta(i));
            Vec va = A - v, vb = B - v;
            if (dot(va, vb) >= 0)
                throw WindowError("pushoff: critical corner does not straddle the vertex");
            push.verts.push_back(A);
            push.verts.push_back(B);
        } else {
            // Miter join: stay exactly on the two displaced segment lines.
            // The averaged point would cut across the curve at hairpin turns;
            // the line intersection cannot, and is still linear in eps * f.
            Vec u_prev = c.seg_delta(prev), u_cur = c.seg_delta(i);
            if (cross(u_prev, u_cur) == 0) {
                Vec avg = Rat(1, 2) * (disp[prev] + disp[i]);
                push.verts.push_back(v + avg);
            } else {
                push.verts.push_back(line_line(v + disp[prev], u_prev, v + disp[i], u_cur));
            }
        }
        Point mid = v + Rat(1, 2) * c.seg_delta(i);
        push.verts.push_back(mid + disp[i]);
    }
    for (int i = 0; i < push.size(); ++i)
        if (push.vertex(i) == push.vertex(i + 1))
            throw WindowError("pushoff: collapsed vertices (epsilon too large)");
    return push;
}

namespace {

bool window_sample_ok(const Curve& c, const MorseFunction& f,
                      const std::vector<CriticalPoint>& crits,
                      const std::vector<SelfIntersection>& sis, const Rat& eps) {
    try {
        Curve push = construct_pushoff(c, f, PushoffConfig{eps});
        if (!validate_immersion(push).ok) return false;
        auto xs = curve_intersections(c, push);
        if (static_cast<int>(xs.size()) != static_cast<int>(crits.size() + 2 * sis.size()))
            return false;
        auto classes = classify_crossings(c, crits, sis, xs);
        return classes.has_value();
    } catch (const GenericityError&) {
        return false;
    } catch (const WindowError&) {
        return false;
    }
}

}  // namespace

Rat transversality_window(const Curve& c, const MorseFunction& f) {
    auto sis = self_intersections(c);
    auto rep = validate_morse(c, f, sis);
    if (!rep.ok) throw GenericityError("transversality_window: invalid Morse data");
    auto crits = critical_points(c, f);
    Rat reach = reach_estimate(c);
    Rat delta = reach / 2;
    Rat min_delta = reach / (Rat(Int(1) << 40));
    // 56 divides into eighths and into the 8-step continuation positions
    // over [delta/4, 3*delta/4], so those samples are certified too.
    const int grid = 56;
    while (delta > min_delta) {
        bool ok = true;
        for (int k = 1; k <= grid && ok; ++k) {
            Rat eps = delta * k / grid;
            ok = window_sample_ok(c, f, crits, sis, eps);
        }
        if (ok) return delta;
        delta /= 2;
    }
    throw WindowError("transversality_window: no admissible epsilon above reach * 2^-40");
}

Rat c2_scaling(const MorseFunction& f, const Curve& c, const Rat& eps1) {
    if (eps1 <= 0) throw std::invalid_argument("c2_scaling: eps1 must be positive");
    int n = c.size();
    Rat max_f(0), max_slope(0), max_dd(0);
    std::vector<Rat> slope(n);
    for (int i = 0; i < n; ++i) {
        max_f = std::max(max_f, abs(f.at_vertex(c, i)));
        Vec d = c.seg_delta(i);
        Rat len = std::max(abs(d.x), abs(d.y));
        slope[i] = f.seg_df(c, i) / len;
        max_slope = std::max(max_slope, abs(slope[i]));
    }
    for (int i = 0; i < n; ++i)
        max_dd = std::max(max_dd, abs(slope[i] - slope[c.mod(i - 1)]));
    Rat total = max_f + max_slope + max_dd;
    Rat a(1);
    while (a * total > eps1) a /= 2;
    return a;
}

ContinuationTrack continuation_track(const Curve& c, const MorseFunction& f, const Rat& eps_hi,
                                     const Rat& eps_lo, int steps, const DiscSearchCfg& cfg) {
    if (steps < 2) throw std::invalid_argument("continuation_track: steps must be >= 2");
    if (!(eps_lo > 0 && eps_lo < eps_hi))
        throw std::invalid_argument("continuation_track: need 0 < eps_lo < eps_hi");
    Rat window = transversality_window(c, f);
    if (eps_hi > window)
        throw WindowError("continuation_track: eps_hi above the transversality window");

    ContinuationTrack track;
    std::vector<ChainComplex> cxs;
    for (int s = 0; s < steps; ++s) {
        Rat eps = eps_hi - (eps_hi - eps_lo) * s / (steps - 1);
        track.epsilons.push_back(eps);
        Curve push = construct_pushoff(c, f, PushoffConfig{eps});
        cxs.push_back(build_hamiltonian(c, push, cfg));
        if (s > 0 && cxs[s].size() != cxs[0].size()) {
            track.events.push_back("generator count changed at eps = " + rat_str(eps));
            throw WindowError("continuation_track: birth/death inside the window");
        }
    }

    int n = cxs[0].size();
    auto sis = self_intersections(c);
    auto crits = critical_points(c, f);
    // to_first[s][i]: index in sample 0 of generator i of sample s.
    std::vector<std::vector<int>> to_first(steps, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) to_first[0][i] = i;
    for (int s = 1; s < steps; ++s) {
        const auto& prev = cxs[s - 1];
        std::vector<int> match(n, -1);
        auto prev_cls = classify_crossings(c, crits, sis, prev.crossings);
        auto cur_cls = classify_crossings(c, crits, sis, cxs[s].crossings);
        if (prev_cls && cur_cls) {
            // Canonical matching: a crossing keeps its critical point or its
            // self-intersection branch throughout the window, exactly.
            for (int i = 0; i < n; ++i) {
                const CrossClass& a = (*prev_cls)[prev.gens[i].crossing];
                for (int j = 0; j < n; ++j) {
                    const CrossClass& b = (*cur_cls)[cxs[s].gens[j].crossing];
                    if (a.kind == b.kind && a.crit == b.crit && a.si == b.si &&
                        a.branch_p == b.branch_p)
                        match[i] = j;
                }
                if (match[i] == -1) {
                    track.events.push_back("unmatched generator at sample " + std::to_string(s));
                    throw WindowError("continuation_track: birth/death inside the window");
                }
            }
        } else {
            // Fallback: nearest location within half the minimal pairwise
            // crossing distance of the previous sample.
            Rat min_d2(-1);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    Vec d = prev.gens[i].at - prev.gens[j].at;
                    Rat d2 = dot(d, d);
                    if (min_d2 < 0 || d2 < min_d2) min_d2 = d2;
                }
            }
            Rat radius2 = min_d2 / 4;
            std::vector<bool> used(n, false);
            for (int i = 0; i < n; ++i) {
                int hit = -1;
                for (int j = 0; j < n; ++j) {
                    Vec d = cxs[s].gens[j].at - prev.gens[i].at;
                    if (dot(d, d) < radius2) {
                        if (hit != -1)
                            throw MatchError(
                                "continuation_track: matching ambiguity, refine steps");
                        hit = j;
                    }
                }
                if (hit == -1 || used[hit]) {
                    track.events.push_back("unmatched generator at sample " + std::to_string(s));
                    throw WindowError("continuation_track: birth/death inside the window");
                }
                used[hit] = true;
                match[i] = hit;
            }
        }
        for (int i = 0; i < n; ++i) {
            // generator match[i] of sample s corresponds to generator i of s-1
            int first = to_first[s - 1][i];
            to_first[s][match[i]] = first;
        }
    }

    track.tracks.assign(n, std::vector<Point>(steps));
    for (int s = 0; s < steps; ++s) {
        std::vector<int> inv(n, -1);
        for (int i = 0; i < n; ++i) inv[to_first[s][i]] = i;
        for (int g = 0; g < n; ++g) track.tracks[g][s] = cxs[s].gens[inv[g]].at;
        std::vector<std::vector<long long>> counts(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                counts[to_first[s][i]][to_first[s][j]] = cxs[s].counts[i][j];
        track.counts.push_back(std::move(counts));
    }
    for (int s = 1; s < steps; ++s)
        if (track.counts[s] != track.counts[0]) track.counts_constant = false;
    return track;
}

}  // namespace floercx
