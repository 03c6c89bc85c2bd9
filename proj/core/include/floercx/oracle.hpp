#ifndef FLOERCX_ORACLE_HPP
#define FLOERCX_ORACLE_HPP

#include "floercx/disc.hpp"

#include <utility>
#include <vector>

namespace floercx {

// Brute-force disc counting over bounded face labelings. Enumerates the
// per-direction boundary multiplicity functions (piecewise constant along
// each curve, jumping only at the corner lifts), derives the face labeling,
// checks every certificate axiom with its own code, and decodes strands to
// count boundary walks. Shares data types with the tracer but none of its
// arc-concatenation machinery.
struct LabelingProblem {
    const Arrangement* arr = nullptr;
    bool two_curves = false;
    int x_crossing = -1, y_crossing = -1;           // two-curve corners
    PearlCorner x{}, y{};                           // one-curve corners
    const std::vector<CriticalPoint>* crits = nullptr;
    int max_w = 4;
    int max_wraps = 4;
};

struct OracleResult {
    long long count = 0;
    bool inconclusive = false;  // a certificate touched the search bound
    std::vector<std::vector<int>> certificates;  // face labelings found
};

OracleResult oracle_bigons(const LabelingProblem& problem);

// Monotone-run partition of f along the curve, computed by direct scan.
// Returns (from_vertex, to_vertex) pairs oriented from index-1 to index-0.
std::vector<std::pair<int, int>> oracle_trajectories(const Curve& c, const MorseFunction& f);

}  // namespace floercx

#endif
