#ifndef FLOERCX_COMPLEX_HPP
#define FLOERCX_COMPLEX_HPP

#include "floercx/disc.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace floercx {

struct Generator {
    enum Kind { Critical, Pair, Crossing } kind = Critical;
    std::string label;
    Point at{};
    int crit = -1;           // Critical: index into the critical point list
    int si = -1;             // Pair: index into the self-intersection list
    bool order_pq = true;    // Pair: (p,q) vs (q,p)
    int crossing = -1;       // Crossing: index into the crossing list
    CurveParam param_a{}, param_b{};  // Crossing: params on curve and pushoff
};

struct DiscLogEntry {
    enum Kind { Trajectory, Disc } kind = Disc;
    int trajectory = -1;  // index into ChainComplex::trajectories
    Bigon bigon;
};

// Generator list plus boundary matrix over GF(2), with integer counts and
// per-entry certificates retained for audit. boundary[i][j] is the
// coefficient of generator j in the boundary of generator i.
struct ChainComplex {
    enum Flavor { Pearly, Hamiltonian } flavor = Pearly;
    std::vector<Generator> gens;
    std::vector<std::vector<std::uint8_t>> boundary;
    std::vector<std::vector<long long>> counts;
    std::map<std::pair<int, int>, std::vector<DiscLogEntry>> logs;

    Curve curve;
    Curve pushoff;  // Hamiltonian flavor only
    MorseFunction morse;
    std::vector<CriticalPoint> crits;        // Pearly flavor
    std::vector<SelfIntersection> sis;       // self-intersections of `curve`
    std::vector<CrossPoint> crossings;       // Hamiltonian flavor
    std::vector<GradientArc> trajectories;   // Pearly flavor
    Arrangement arr;

    int size() const { return static_cast<int>(gens.size()); }
    int find_label(const std::string& label) const;
};

ChainComplex build_pearly(const Curve& c, const MorseFunction& f, const DiscSearchCfg& cfg = {});
ChainComplex build_hamiltonian(const Curve& l, const Curve& l_push,
                               const DiscSearchCfg& cfg = {});

struct DsqReport {
    std::vector<std::vector<std::uint8_t>> matrix;
    std::vector<std::pair<int, int>> nonzero;  // (from, to) pairs
    bool zero = true;
};

DsqReport boundary_squared(const ChainComplex& cx);

// Branch-letter names for the ordered pairs of a self-intersection: a
// two-character label names (p, q) in order, otherwise synthetic names.
std::pair<std::string, std::string> branch_names(const SelfIntersection& si, int index);

}  // namespace floercx

#endif
