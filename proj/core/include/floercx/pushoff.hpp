#ifndef FLOERCX_PUSHOFF_HPP
#define FLOERCX_PUSHOFF_HPP

#include "floercx/complex.hpp"

#include <vector>

namespace floercx {

struct PushoffConfig {
    Rat epsilon{};
    enum Side { Left, Right } side = Left;
};

// Weinstein pushoff: each segment is displaced by eps * df * n / |seg|^2
// along its left normal, joined by averaged corners at regular vertices and
// by a straight pass directly through each critical vertex, where the
// displacement vanishes identically. The pushoff therefore crosses the curve
// exactly at the critical points. Linear in eps * f by construction.
Curve construct_pushoff(const Curve& c, const MorseFunction& f, const PushoffConfig& cfg);

// Largest delta certified by sampling: for eight sampled eps in (0, delta],
// the pushoff is immersed, meets the curve transversally, the crossing count
// equals |Crit| + 2 * #self-intersections, one crossing sits at each critical
// point, and each self-intersection owns one crossing per branch. Found by
// geometric halving from reach_estimate. Throws WindowError when no such
// delta exists above 2^-40 * reach.
Rat transversality_window(const Curve& c, const MorseFunction& f);

// Largest dyadic a <= 1 with a * (max|f| + max normalized slope + max slope
// second difference) <= eps1. Monotone in eps1 and exactly linear under
// rescaling of f.
Rat c2_scaling(const MorseFunction& f, const Curve& c, const Rat& eps1);

struct ContinuationTrack {
    std::vector<Rat> epsilons;  // decreasing
    // tracks[g][s]: location of generator g at sample s, indexed as in the
    // first sample's Hamiltonian complex.
    std::vector<std::vector<Point>> tracks;
    std::vector<std::string> events;  // births/deaths; empty inside the window
    // counts[s][i][j]: integer bigon count from generator i to j at sample s,
    // in first-sample indexing.
    std::vector<std::vector<std::vector<long long>>> counts;
    bool counts_constant = true;
};

// Tracks generators and per-pair bigon counts along decreasing eps samples.
// Matching is nearest-location within half the minimal pairwise crossing
// distance. Births or deaths raise WindowError; matching ambiguity raises
// MatchError asking for more steps.
ContinuationTrack continuation_track(const Curve& c, const MorseFunction& f, const Rat& eps_hi,
                                     const Rat& eps_lo, int steps,
                                     const DiscSearchCfg& cfg = {});

}  // namespace floercx

#endif
