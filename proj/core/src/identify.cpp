#include "floercx/identify.hpp"

#include <array>

namespace floercx {

std::optional<std::vector<CrossClass>> classify_crossings(
    const Curve& c, const std::vector<CriticalPoint>& crits,
    const std::vector<SelfIntersection>& sis, const std::vector<CrossPoint>& crossings) {
    std::vector<CrossClass> out(crossings.size());
    std::vector<int> crit_hits(crits.size(), 0);
    std::vector<std::array<int, 2>> branch_hits(sis.size(), {0, 0});
    for (size_t k = 0; k < crossings.size(); ++k) {
        const CrossPoint& cp = crossings[k];
        if (cp.vertex_a) {
            int found = -1;
            for (size_t j = 0; j < crits.size(); ++j)
                if (c.vertex(crits[j].vertex) == cp.at) found = static_cast<int>(j);
            if (found < 0) return std::nullopt;  // crossing at a non-critical vertex
            out[k] = CrossClass{CrossClass::AtCrit, found, -1, true};
            crit_hits[found] += 1;
            continue;
        }
        if (sis.empty()) return std::nullopt;  // stray crossing on an embedded curve
        Rat best(-1);
        int best_si = -1;
        bool best_p = true;
        for (size_t s = 0; s < sis.size(); ++s) {
            for (bool is_p : {true, false}) {
                const CurveParam& br = is_p ? sis[s].p : sis[s].q;
                Rat d = c.param_dist(cp.on_a, br);
                if (best < 0 || d < best) {
                    best = d;
                    best_si = static_cast<int>(s);
                    best_p = is_p;
                }
            }
        }
        out[k] = CrossClass{CrossClass::NearBranch, -1, best_si, best_p};
        branch_hits[best_si][best_p ? 0 : 1] += 1;
    }
    for (int h : crit_hits)
        if (h != 1) return std::nullopt;
    for (const auto& bh : branch_hits)
        if (bh[0] != 1 || bh[1] != 1) return std::nullopt;
    return out;
}

Identification identify_generators(const ChainComplex& pearly, const ChainComplex& ham) {
    Identification id;
    if (pearly.flavor != ChainComplex::Pearly || ham.flavor != ChainComplex::Hamiltonian) {
        id.problems.push_back("flavor mismatch");
        return id;
    }
    if (pearly.size() != ham.size()) {
        id.problems.push_back("generator counts differ: " + std::to_string(pearly.size()) +
                              " vs " + std::to_string(ham.size()));
        return id;
    }
    auto classes = classify_crossings(pearly.curve, pearly.crits, pearly.sis, ham.crossings);
    if (!classes) {
        id.problems.push_back("crossing classification failed (wrong local cell structure)");
        return id;
    }
    id.map.assign(pearly.size(), -1);
    for (int i = 0; i < pearly.size(); ++i) {
        const Generator& g = pearly.gens[i];
        int target = -1;
        for (int j = 0; j < ham.size(); ++j) {
            const CrossClass& cc = (*classes)[ham.gens[j].crossing];
            if (g.kind == Generator::Critical) {
                if (cc.kind == CrossClass::AtCrit && cc.crit == g.crit) target = j;
            } else if (g.kind == Generator::Pair) {
                // (p,q) corresponds to the crossing on the branch of p.
                if (cc.kind == CrossClass::NearBranch && cc.si == g.si &&
                    cc.branch_p == g.order_pq)
                    target = j;
            }
        }
        if (target < 0) {
            id.problems.push_back("no partner for generator " + g.label);
            return id;
        }
        id.map[i] = target;
    }
    std::vector<bool> used(ham.size(), false);
    for (int t : id.map) {
        if (used[t]) {
            id.problems.push_back("bijection is not injective");
            return id;
        }
        used[t] = true;
    }
    id.matched = true;
    return id;
}

IdentificationReport compare_complexes(const ChainComplex& pearly, const ChainComplex& ham,
                                       const Identification& bij) {
    IdentificationReport rep;
    rep.matched = bij.matched;
    rep.bijection = bij.map;
    if (!bij.matched) return rep;
    int n = pearly.size();
    rep.boundary_equal = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (pearly.boundary[i][j] != ham.boundary[bij.map[i]][bij.map[j]]) {
                rep.boundary_equal = false;
                rep.mismatches.push_back({i, j, pearly.counts[i][j],
                                          ham.counts[bij.map[i]][bij.map[j]]});
            }
        }
    }
    DsqReport dp = boundary_squared(pearly);
    DsqReport dh = boundary_squared(ham);
    rep.dsq_equal = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (dp.matrix[i][j] != dh.matrix[bij.map[i]][bij.map[j]]) rep.dsq_equal = false;
    return rep;
}

}  // namespace floercx
