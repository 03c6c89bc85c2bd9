#include "floercx/complex.hpp"

#include "floercx/errors.hpp"

namespace floercx {

int ChainComplex::find_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (gens[i].label == label) return i;
    return -1;
}

std::pair<std::string, std::string> branch_names(const SelfIntersection& si, int index) {
    if (si.label.size() == 2)
        return {std::string(1, si.label[0]), std::string(1, si.label[1])};
    std::string base = si.label.empty() ? "s" + std::to_string(index) : si.label;
    return {base + "p", base + "q"};
}

namespace {

void require_valid(const ValidationReport& rep, const std::string& what) {
    if (rep.ok) return;
    std::string msg = what + ":";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    throw GenericityError(msg);
}

std::string crit_label(const CriticalPoint& cp, int k) {
    if (!cp.label.empty()) return cp.label;
    return "c" + std::to_string(k);
}

}  // namespace

ChainComplex build_pearly(const Curve& c, const MorseFunction& f, const DiscSearchCfg& cfg) {
    ChainComplex cx;
    cx.flavor = ChainComplex::Pearly;
    cx.curve = c;
    cx.morse = f;
    require_valid(validate_immersion(c), "immersion violation");
    cx.sis = self_intersections(c);
    require_valid(validate_morse(c, f, cx.sis), "Morse violation");
    cx.crits = critical_points(c, f);
    cx.trajectories = rigid_trajectories(c, f);
    cx.arr = build_arrangement(c);

    for (size_t k = 0; k < cx.crits.size(); ++k) {
        Generator g;
        g.kind = Generator::Critical;
        g.crit = static_cast<int>(k);
        g.at = c.vertex(cx.crits[k].vertex);
        g.label = crit_label(cx.crits[k], static_cast<int>(k));
        cx.gens.push_back(std::move(g));
    }
    for (size_t k = 0; k < cx.sis.size(); ++k) {
        auto [pn, qn] = branch_names(cx.sis[k], static_cast<int>(k));
        for (bool order_pq : {true, false}) {
            Generator g;
            g.kind = Generator::Pair;
            g.si = static_cast<int>(k);
            g.order_pq = order_pq;
            g.at = cx.sis[k].at;
            g.label = order_pq ? "(" + pn + "," + qn + ")" : "(" + qn + "," + pn + ")";
            cx.gens.push_back(std::move(g));
        }
    }

    int n = cx.size();
    cx.counts.assign(n, std::vector<long long>(n, 0));

    // Type 1: rigid gradient trajectories, from index 1 down to index 0.
    auto crit_gen = [&](int crit) {
        for (int i = 0; i < n; ++i)
            if (cx.gens[i].kind == Generator::Critical && cx.gens[i].crit == crit) return i;
        throw std::logic_error("missing critical generator");
    };
    auto pair_gen = [&](int si, bool order_pq) {
        for (int i = 0; i < n; ++i)
            if (cx.gens[i].kind == Generator::Pair && cx.gens[i].si == si &&
                cx.gens[i].order_pq == order_pq)
                return i;
        throw std::logic_error("missing pair generator");
    };
    for (size_t t = 0; t < cx.trajectories.size(); ++t) {
        int from = crit_gen(cx.trajectories[t].from_cp);
        int to = crit_gen(cx.trajectories[t].to_cp);
        cx.counts[from][to] += 1;
        DiscLogEntry e;
        e.kind = DiscLogEntry::Trajectory;
        e.trajectory = static_cast<int>(t);
        cx.logs[{from, to}].push_back(std::move(e));
    }

    // Types 2-4 via the disc tracer; index pruning applied up front.
    auto add_bigons = [&](int from, int to, const PearlCorner& px, const PearlCorner& py) {
        auto found = bigons_one_curve(cx.arr, px, py, cx.crits, cfg);
        for (auto& b : found) {
            cx.counts[from][to] += 1;
            DiscLogEntry e;
            e.kind = DiscLogEntry::Disc;
            e.bigon = std::move(b);
            cx.logs[{from, to}].push_back(std::move(e));
        }
    };
    for (size_t k = 0; k < cx.crits.size(); ++k) {
        if (cx.crits[k].index != 0) continue;  // Corollary pruning: Type 2 inputs are minima
        PearlCorner px{PearlCorner::Crit, static_cast<int>(k), -1, true};
        for (size_t s = 0; s < cx.sis.size(); ++s) {
            for (bool order : {true, false}) {
                PearlCorner py{PearlCorner::Pair, -1, static_cast<int>(s), order};
                add_bigons(crit_gen(static_cast<int>(k)), pair_gen(static_cast<int>(s), order),
                           px, py);
            }
        }
    }
    for (size_t s = 0; s < cx.sis.size(); ++s) {
        for (bool order : {true, false}) {
            PearlCorner px{PearlCorner::Pair, -1, static_cast<int>(s), order};
            for (size_t k = 0; k < cx.crits.size(); ++k) {
                if (cx.crits[k].index != 1) continue;  // Type 3 outputs are maxima
                PearlCorner py{PearlCorner::Crit, static_cast<int>(k), -1, true};
                add_bigons(pair_gen(static_cast<int>(s), order), crit_gen(static_cast<int>(k)),
                           px, py);
            }
            for (size_t s2 = 0; s2 < cx.sis.size(); ++s2) {
                for (bool order2 : {true, false}) {
                    PearlCorner py{PearlCorner::Pair, -1, static_cast<int>(s2), order2};
                    add_bigons(pair_gen(static_cast<int>(s), order),
                               pair_gen(static_cast<int>(s2), order2), px, py);
                }
            }
        }
    }

    cx.boundary.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cx.boundary[i][j] = static_cast<std::uint8_t>(cx.counts[i][j] & 1);
    return cx;
}

ChainComplex build_hamiltonian(const Curve& l, const Curve& l_push, const DiscSearchCfg& cfg) {
    ChainComplex cx;
    cx.flavor = ChainComplex::Hamiltonian;
    cx.curve = l;
    cx.pushoff = l_push;
    require_valid(validate_immersion(l), "immersion violation (curve)");
    require_valid(validate_immersion(l_push), "immersion violation (pushoff)");
    cx.sis = self_intersections(l);
    cx.arr = build_arrangement(l, l_push);
    cx.crossings = cx.arr.crossings;

    // Labels: crossings pinned at curve vertices take the vertex label
    // (these are the critical crossings); the rest take the black branch
    // letter of the nearest self-intersection.
    for (size_t k = 0; k < cx.crossings.size(); ++k) {
        const CrossPoint& cp = cx.crossings[k];
        Generator g;
        g.kind = Generator::Crossing;
        g.crossing = static_cast<int>(k);
        g.at = cp.at;
        g.param_a = cp.on_a;
        g.param_b = cp.on_b;
        if (cp.vertex_a) {
            for (const CurveLabel& lab : l.labels)
                if (lab.at == cp.at) g.label = lab.name;
            if (g.label.empty()) g.label = "v" + std::to_string(cp.on_a.seg);
        } else if (!cx.sis.empty()) {
            Rat best(-1);
            int best_si = -1;
            bool best_p = true;
            for (size_t s = 0; s < cx.sis.size(); ++s) {
                for (bool is_p : {true, false}) {
                    const CurveParam& br = is_p ? cx.sis[s].p : cx.sis[s].q;
                    Rat d = l.param_dist(cp.on_a, br);
                    if (best < 0 || d < best) {
                        best = d;
                        best_si = static_cast<int>(s);
                        best_p = is_p;
                    }
                }
            }
            auto [pn, qn] = branch_names(cx.sis[best_si], best_si);
            g.label = best_p ? pn : qn;
        } else {
            g.label = "x" + std::to_string(k);
        }
        cx.gens.push_back(std::move(g));
    }

    int n = cx.size();
    cx.counts.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto found = bigons_two_curves(cx.arr, i, j, cfg);
            for (auto& b : found) {
                cx.counts[i][j] += 1;
                DiscLogEntry e;
                e.kind = DiscLogEntry::Disc;
                e.bigon = std::move(b);
                cx.logs[{i, j}].push_back(std::move(e));
            }
        }
    }
    cx.boundary.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cx.boundary[i][j] = static_cast<std::uint8_t>(cx.counts[i][j] & 1);
    return cx;
}

DsqReport boundary_squared(const ChainComplex& cx) {
    int n = cx.size();
    DsqReport rep;
    rep.matrix.assign(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int acc = 0;
            for (int k = 0; k < n; ++k) acc ^= cx.boundary[i][k] & cx.boundary[k][j];
            rep.matrix[i][j] = static_cast<std::uint8_t>(acc);
            if (acc) {
                rep.nonzero.emplace_back(i, j);
                rep.zero = false;
            }
        }
    }
    return rep;
}

}  // namespace floercx
