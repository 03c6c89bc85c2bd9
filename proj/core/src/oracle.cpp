#include "floercx/oracle.hpp"

#include <algorithm>
#include <map>

namespace floercx {

namespace {

// One boundary strand endpoint: a strand of the given direction begins or
// ends at the given cut position of the given curve.
struct StrandEvent {
    int curve;
    int cut;
    bool fwd;
    bool begin;
};

struct CurveProfile {
    std::vector<int> mp, mm;  // per edge position on the curve
    bool ok = true;
};

// Propagates per-direction multiplicities around the curve from base values,
// applying the strand events at their cuts.
CurveProfile propagate(int m, int mp0, int mm0, const std::vector<StrandEvent>& events,
                       int curve) {
    CurveProfile prof;
    std::vector<int> dmp(m, 0), dmm(m, 0);
    for (const auto& ev : events) {
        if (ev.curve != curve) continue;
        if (ev.fwd) {
            dmp[ev.cut] += ev.begin ? 1 : -1;
        } else {
            dmm[ev.cut] += ev.begin ? -1 : 1;
        }
    }
    prof.mp.resize(m);
    prof.mm.resize(m);
    prof.mp[0] = mp0;
    prof.mm[0] = mm0;
    for (int j = 1; j < m; ++j) {
        prof.mp[j] = prof.mp[j - 1] + dmp[j];
        prof.mm[j] = prof.mm[j - 1] + dmm[j];
    }
    if (prof.mp[m - 1] + dmp[0] != prof.mp[0] || prof.mm[m - 1] + dmm[0] != prof.mm[0]) {
        prof.ok = false;
        return prof;
    }
    for (int j = 0; j < m; ++j)
        if (prof.mp[j] < 0 || prof.mm[j] < 0) prof.ok = false;
    return prof;
}

// Indicator of the edges covered by a zero-wrap arc between two cuts.
std::vector<int> interval_cover(int m, int from_cut, int to_cut, bool fwd) {
    std::vector<int> cover(m, 0);
    if (fwd) {
        int steps = (to_cut - from_cut + m) % m;
        for (int s = 0; s < steps; ++s) cover[(from_cut + s) % m] = 1;
    } else {
        int steps = (from_cut - to_cut + m) % m;
        for (int s = 0; s < steps; ++s) cover[(from_cut - 1 - s + m) % m] = 1;
    }
    return cover;
}

struct ArcSpec {
    int curve;
    int from_cut, to_cut;  // departure and arrival cut positions
};

int arriving_dart(const Arrangement& arr, int curve, int cut, bool fwd) {
    const auto& list = arr.curve_edges[curve];
    int m = static_cast<int>(list.size());
    if (fwd) return 2 * list[(cut - 1 + m) % m];
    return 2 * list[cut] + 1;
}

int departing_dart(const Arrangement& arr, int curve, int cut, bool fwd) {
    const auto& list = arr.curve_edges[curve];
    int m = static_cast<int>(list.size());
    if (fwd) return 2 * list[cut];
    return 2 * list[(cut - 1 + m) % m] + 1;
}

// Convexity of a walk corner, re-derived from the vertex fan: the wedge from
// the departing dart ccw to the reversed arriving dart must be one sector.
bool corner_convex(const Arrangement& arr, int dart_in, int dart_out, int* sector_out) {
    int v = arr.dart_head(dart_in);
    if (arr.dart_tail(dart_out) != v) return false;
    const auto& darts = arr.verts[v].darts;
    int deg = static_cast<int>(darts.size());
    for (int i = 0; i < deg; ++i) {
        if (darts[i] == dart_out) {
            *sector_out = i;
            return darts[(i + 1) % deg] == arr.dart_rev(dart_in);
        }
   }
    return false;
}

// Wedges at critical crossings collapse as epsilon -> 0 only when their
// sector has unequal windings; a disc cornered at two critical crossings
// limits onto a Morse trajectory and needs this at both ends.
bool crit_corner_pair_ok(const Arrangement& arr, int in_vid, int in_sector, int out_vid,
                         int out_sector) {
    auto at_crit = [&](int vid) {
        const auto& vert = arr.verts[vid];
        return vert.kind == Arrangement::Vertex::Crossing && arr.crossings[vert.index].vertex_a;
    };
    if (!at_crit(in_vid) || !at_crit(out_vid)) return true;
    auto sliver = [&](int vid, int sector) {
        int f = arr.verts[vid].sector_face[sector];
        return arr.winding[f][0] != arr.winding[f][1];
    };
    return sliver(in_vid, in_sector) && sliver(out_vid, out_sector);
}

}  // namespace

OracleResult oracle_bigons(const LabelingProblem& problem) {
    const Arrangement& arr = *problem.arr;
    OracleResult res;

    // Resolve the two arcs: each runs from its departure cut to its arrival
    // cut. Arc 1 carries the output departure and input arrival lifts; arc 2
    // the input departure and output arrival.
    ArcSpec a1{}, a2{};
    int mark_curve = -1;
    CurveParam mark{};
    bool teardrop = false;
    if (problem.two_curves) {
        const CrossPoint& x = arr.crossings[problem.x_crossing];
        const CrossPoint& y = arr.crossings[problem.y_crossing];
        a1 = {0, arr.cut_position(0, y.on_a), arr.cut_position(0, x.on_a)};
        a2 = {1, arr.cut_position(1, x.on_b), arr.cut_position(1, y.on_b)};
    } else {
        const auto& sis = arr.sis[0];
        auto lift = [&](const PearlCorner& pc, bool first) {
            const SelfIntersection& s = sis[pc.si];
            return (first == pc.order_pq) ? s.p : s.q;
        };
        if (problem.x.kind == PearlCorner::Crit && problem.y.kind == PearlCorner::Crit) return res;
        if (problem.x.kind == PearlCorner::Crit) {
            if ((*problem.crits)[problem.x.crit].index != 0) return res;
            teardrop = true;
            mark_curve = 0;
            mark = (*problem.crits)[problem.x.crit].param;
            a1 = {0, arr.cut_position(0, lift(problem.y, true)),
                  arr.cut_position(0, lift(problem.y, false))};
        } else if (problem.y.kind == PearlCorner::Crit) {
            if ((*problem.crits)[problem.y.crit].index != 1) return res;
            teardrop = true;
            mark_curve = 0;
            mark = (*problem.crits)[problem.y.crit].param;
            a1 = {0, arr.cut_position(0, lift(problem.x, false)),
                  arr.cut_position(0, lift(problem.x, true))};
        } else {
            a1 = {0, arr.cut_position(0, lift(problem.y, true)),
                  arr.cut_position(0, lift(problem.x, true))};
            a2 = {0, arr.cut_position(0, lift(problem.x, false)),
                  arr.cut_position(0, lift(problem.y, false))};
        }
    }

    int mark_pos = -1;
    if (teardrop) {
        int mark_edge = arr.edge_containing(mark_curve, mark);
        const auto& list = arr.curve_edges[mark_curve];
        for (size_t i = 0; i < list.size(); ++i)
            if (list[i] == mark_edge) mark_pos = static_cast<int>(i);
    }

    const int gross_bound = 2 * (problem.max_wraps + 1);
    std::vector<bool> dirs = {true, false};

    // Edge id -> (curve, position) for O(1) multiplicity lookup.
    std::vector<std::pair<int, int>> edge_pos(arr.edges.size(), {-1, -1});
    for (int k = 0; k < arr.ncurves(); ++k)
        for (size_t j = 0; j < arr.curve_edges[k].size(); ++j)
            edge_pos[arr.curve_edges[k][j]] = {k, static_cast<int>(j)};

    auto derive_and_check = [&](const std::vector<CurveProfile>& prof,
                                const std::vector<std::pair<int, int>>& corner_darts)
        -> std::optional<std::vector<int>> {
        // Face labels from the net multiplicity jumps.
        std::vector<int> w(arr.n_faces, 0);
        std::vector<bool> seen(arr.n_faces, false);
        seen[arr.outer_face] = true;
        std::vector<int> queue = {arr.outer_face};
        auto net = [&](int eid) {
            auto [k, j] = edge_pos[eid];
            if (k < 0 || k >= static_cast<int>(prof.size())) return 0;
            return prof[k].mp[j] - prof[k].mm[j];
        };
        while (!queue.empty()) {
            int f = queue.back();
            queue.pop_back();
            for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
                const auto& ed = arr.edges[e];
                int jump = net(e);
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
        for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e)
            if (w[arr.edges[e].face_left] - w[arr.edges[e].face_right] != net(e))
                return std::nullopt;
        for (int f = 0; f < arr.n_faces; ++f)
            if (w[f] < 0 || w[f] > problem.max_w) return std::nullopt;
        if (w[arr.outer_face] != 0) return std::nullopt;
        // Corner defects: +-1 in the prescribed sector at the two corner
        // vertices, zero at every other degree-4 vertex.
        std::vector<int> expected(arr.verts.size(), 0);
        std::vector<int> corners_at(arr.verts.size(), 0);
        for (auto [vid, sector] : corner_darts) {
            expected[vid] += (sector % 2 == 0) ? 1 : -1;
            corners_at[vid] += 1;
        }
        for (size_t v = 0; v < arr.verts.size(); ++v) {
            if (arr.verts[v].darts.size() != 4) continue;
            int defect = 0;
            for (int i = 0; i < 4; ++i) {
                int val = w[arr.verts[v].sector_face[i]];
                defect += (i % 2 == 0) ? val : -val;
            }
            if (defect != expected[v]) return std::nullopt;
        }
        // Sheet-counted Euler characteristic must be that of a single disc.
        auto gross = [&](int eid) {
            auto [k, j] = edge_pos[eid];
            if (k < 0 || k >= static_cast<int>(prof.size())) return 0;
            return prof[k].mp[j] + prof[k].mm[j];
        };
        long long chi4 = 0;
        for (int f = 0; f < arr.n_faces; ++f) chi4 += 4LL * w[f];
        for (int e = 0; e < static_cast<int>(arr.edges.size()); ++e) {
            int b = gross(e);
            int wl = w[arr.edges[e].face_left], wr = w[arr.edges[e].face_right];
            if (wl + wr < b || (wl + wr - b) % 2 != 0) return std::nullopt;
            chi4 -= 2LL * (wl + wr + b);
        }
        for (size_t v = 0; v < arr.verts.size(); ++v) {
            const auto& vert = arr.verts[v];
            long long sectors = 0;
            for (int f : vert.sector_face) sectors += w[f];
            long long ends = 0;
            for (int d : vert.darts) ends += gross(d >> 1);
            if (ends % 2 != 0) return std::nullopt;
            long long visits = ends / 2;
            long long c = corners_at[v];
            long long p = visits - c;
            if (p < 0) return std::nullopt;
            if (vert.darts.size() == 4) {
                long long interior4 = sectors - 2 * p - c;
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
    };

    auto record = [&](const std::vector<int>& w, long long mult) {
        if (mult <= 0) return;
        res.count += mult;
        res.certificates.push_back(w);
        if (*std::max_element(w.begin(), w.end()) >= problem.max_w) res.inconclusive = true;
    };

    if (teardrop) {
        // Single monotone strand from a1.from to a1.to through the mark.
        int m = static_cast<int>(arr.curve_edges[0].size());
        for (bool d : dirs) {
            std::vector<StrandEvent> events = {{0, a1.from_cut, d, true},
                                               {0, a1.to_cut, d, false}};
            for (int base = 0; base <= gross_bound; ++base) {
                CurveProfile prof =
                    propagate(m, d ? base : 0, d ? 0 : base, events, 0);
                if (!prof.ok) continue;
                const std::vector<int>& u = d ? prof.mp : prof.mm;
                if (!d && std::any_of(prof.mp.begin(), prof.mp.end(), [](int v) { return v; }))
                    continue;
                if (d && std::any_of(prof.mm.begin(), prof.mm.end(), [](int v) { return v; }))
                    continue;
                auto cover = interval_cover(m, a1.from_cut, a1.to_cut, d);
                int wraps = -1;
                bool decodable = true;
                for (int j = 0; j < m; ++j) {
                    int extra = u[j] - cover[j];
                    if (extra < 0) decodable = false;
                    if (wraps == -1)
                        wraps = extra;
                    else if (extra != wraps)
                        decodable = false;
                }
                if (!decodable || wraps < 0 || wraps > problem.max_wraps) continue;
                if (wraps == 0 && (a1.from_cut == a1.to_cut)) continue;  // empty walk
                int din = arriving_dart(arr, 0, a1.to_cut, d);
                int dout = departing_dart(arr, 0, a1.from_cut, d);
                int sector = -1;
                if (!corner_convex(arr, din, dout, &sector)) continue;
                int vid = arr.dart_head(din);
                auto w = derive_and_check({prof}, {{vid, sector}});
                if (!w) continue;
                record(*w, u[mark_pos]);
            }
        }
        return res;
    }

    // Two-arc cases. Enumerate both arc directions and base multiplicities.
    for (bool d1 : dirs) {
        for (bool d2 : dirs) {
            // Corner darts are direction-dependent but base-independent.
            int in_arr_dart = arriving_dart(arr, a1.curve, a1.to_cut, d1);
            int in_dep_dart = departing_dart(arr, a2.curve, a2.from_cut, d2);
            int out_dep_dart = departing_dart(arr, a1.curve, a1.from_cut, d1);
            int out_arr_dart = arriving_dart(arr, a2.curve, a2.to_cut, d2);
            int in_sector = -1, out_sector = -1;
            if (!corner_convex(arr, in_arr_dart, in_dep_dart, &in_sector)) continue;
            if (!corner_convex(arr, out_arr_dart, out_dep_dart, &out_sector)) continue;
            int in_vid = arr.dart_head(in_arr_dart);
            int out_vid = arr.dart_head(out_arr_dart);
            if (problem.two_curves &&
                !crit_corner_pair_ok(arr, in_vid, in_sector, out_vid, out_sector))
                continue;

            std::vector<StrandEvent> events = {{a1.curve, a1.from_cut, d1, true},
                                               {a1.curve, a1.to_cut, d1, false},
                                               {a2.curve, a2.from_cut, d2, true},
                                               {a2.curve, a2.to_cut, d2, false}};
            int m0 = static_cast<int>(arr.curve_edges[0].size());
            int m1 = arr.ncurves() == 2 ? static_cast<int>(arr.curve_edges[1].size()) : 0;

            if (problem.two_curves) {
                auto cov1 = interval_cover(m0, a1.from_cut, a1.to_cut, d1);
                auto cov2 = interval_cover(m1, a2.from_cut, a2.to_cut, d2);
                for (int b1 = 0; b1 <= gross_bound; ++b1) {
                    CurveProfile p0 = propagate(m0, d1 ? b1 : 0, d1 ? 0 : b1, events, 0);
                    if (!p0.ok) continue;
                    const auto& u1 = d1 ? p0.mp : p0.mm;
                    const auto& z1 = d1 ? p0.mm : p0.mp;
                    if (std::any_of(z1.begin(), z1.end(), [](int v) { return v; })) continue;
                    int k1 = -1;
                    bool ok1 = true;
                    for (int j = 0; j < m0; ++j) {
                        int extra = u1[j] - cov1[j];
                        if (extra < 0) ok1 = false;
                        if (k1 == -1)
                            k1 = extra;
                        else if (extra != k1)
                            ok1 = false;
                    }
                    if (!ok1 || k1 < 0 || k1 > problem.max_wraps) continue;
                    if (k1 == 0 && a1.from_cut == a1.to_cut) continue;
                    for (int b2 = 0; b2 <= gross_bound; ++b2) {
                        CurveProfile p1 = propagate(m1, d2 ? b2 : 0, d2 ? 0 : b2, events, 1);
                        if (!p1.ok) continue;
                        const auto& u2 = d2 ? p1.mp : p1.mm;
                        const auto& z2 = d2 ? p1.mm : p1.mp;
                        if (std::any_of(z2.begin(), z2.end(), [](int v) { return v; })) continue;
                        int k2 = -1;
                        bool ok2 = true;
                        for (int j = 0; j < m1; ++j) {
                            int extra = u2[j] - cov2[j];
                            if (extra < 0) ok2 = false;
                            if (k2 == -1)
                                k2 = extra;
                            else if (extra != k2)
                                ok2 = false;
                        }
                        if (!ok2 || k2 < 0 || k2 > problem.max_wraps) continue;
                        if (k2 == 0 && a2.from_cut == a2.to_cut) continue;
                        auto w = derive_and_check({p0, p1},
                                                  {{in_vid, in_sector}, {out_vid, out_sector}});
                        if (!w) continue;
                        record(*w, 1);
                    }
                }
            } else {
                auto cov1 = interval_cover(m0, a1.from_cut, a1.to_cut, d1);
                auto cov2 = interval_cover(m0, a2.from_cut, a2.to_cut, d2);
                // Enumerate the two direction-profiles on the single curve.
                for (int bp = 0; bp <= gross_bound; ++bp) {
                    for (int bm = 0; bm <= gross_bound; ++bm) {
                        CurveProfile p0 = propagate(m0, bp, bm, events, 0);
                        if (!p0.ok) continue;
                        long long decodings = 0;
                        if (d1 == d2) {
                            const auto& u = d1 ? p0.mp : p0.mm;
                            const auto& z = d1 ? p0.mm : p0.mp;
                            if (std::any_of(z.begin(), z.end(), [](int v) { return v; }))
                                continue;
                            int c = -1;
                            bool ok = true;
                            for (int j = 0; j < m0; ++j) {
                                int extra = u[j] - cov1[j] - cov2[j];
                                if (extra < 0) ok = false;
                                if (c == -1)
                                    c = extra;
                                else if (extra != c)
                                    ok = false;
                            }
                            if (!ok || c < 0) continue;
                            // Split c = k1 + k2 with both wrap counts bounded;
                            // empty zero-wrap arcs are rejected per split.
                            for (int k1 = 0; k1 <= std::min(c, problem.max_wraps); ++k1) {
                                int k2 = c - k1;
                                if (k2 > problem.max_wraps) continue;
                                if (k1 == 0 && a1.from_cut == a1.to_cut) continue;
                                if (k2 == 0 && a2.from_cut == a2.to_cut) continue;
                                ++decodings;
                            }
                        } else {
                            const auto& u1 = d1 ? p0.mp : p0.mm;
                            const auto& u2 = d2 ? p0.mp : p0.mm;
                            int k1 = -1, k2 = -1;
                            bool ok = true;
                            for (int j = 0; j < m0; ++j) {
                                int e1 = u1[j] - cov1[j];
                                int e2 = u2[j] - cov2[j];
                                if (e1 < 0 || e2 < 0) ok = false;
                                if (k1 == -1)
                                    k1 = e1;
                                else if (e1 != k1)
                                    ok = false;
                                if (k2 == -1)
                                    k2 = e2;
                                else if (e2 != k2)
                                    ok = false;
                            }
                            if (!ok || k1 < 0 || k1 > problem.max_wraps || k2 < 0 ||
                                k2 > problem.max_wraps)
                                continue;
                            if (k1 == 0 && a1.from_cut == a1.to_cut) continue;
                            if (k2 == 0 && a2.from_cut == a2.to_cut) continue;
                            decodings = 1;
                        }
                        if (decodings == 0) continue;
                        auto w = derive_and_check({p0},
                                                  {{in_vid, in_sector}, {out_vid, out_sector}});
                        if (!w) continue;
                        record(*w, decodings);
                    }
                }
            }
        }
    }
    return res;
}

std::vector<std::pair<int, int>> oracle_trajectories(const Curve& c, const MorseFunction& f) {
    int n = c.size();
    std::vector<int> crit_verts;
    std::vector<int> crit_kind;  // +1 peak of f, -1 valley
    for (int i = 0; i < n; ++i) {
        Rat before = f.at_vertex(c, i) - f.at_vertex(c, i - 1);
        Rat after = f.at_vertex(c, i + 1) - f.at_vertex(c, i);
        if (sgn(before) == sgn(after)) continue;
        crit_verts.push_back(i);
        crit_kind.push_back(sgn(before) > 0 ? 1 : -1);
    }
    std::vector<std::pair<int, int>> arcs;
    int m = static_cast<int>(crit_verts.size());
    for (int k = 0; k < m; ++k) {
        int a = crit_verts[k], b = crit_verts[(k + 1) % m];
        if (crit_kind[k] == 1)
            arcs.emplace_back(a, b);  // f falls from the peak a to the valley b
        else
            arcs.emplace_back(b, a);
    }
    return arcs;
}

}  // namespace floercx
