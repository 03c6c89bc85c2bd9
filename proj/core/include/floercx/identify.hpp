#ifndef FLOERCX_IDENTIFY_HPP
#define FLOERCX_IDENTIFY_HPP

#include "floercx/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace floercx {

// Structural classification of curve/pushoff crossings: either pinned at a
// critical point of the curve (exact location match) or living on a branch
// of a self-intersection (nearest branch parameter). Returns nullopt unless
// every critical point owns exactly one crossing and every branch of every
// self-intersection owns exactly one crossing.
struct CrossClass {
    enum Kind { AtCrit, NearBranch } kind = AtCrit;
    int crit = -1;
    int si = -1;
    bool branch_p = true;
};

std::optional<std::vector<CrossClass>> classify_crossings(
    const Curve& c, const std::vector<CriticalPoint>& crits,
    const std::vector<SelfIntersection>& sis, const std::vector<CrossPoint>& crossings);

struct Identification {
    bool matched = false;
    std::vector<int> map;  // pearly generator index -> hamiltonian generator index
    std::vector<std::string> problems;
};

// Canonical generator bijection: a critical point maps to the crossing at
// exactly its location; the ordered pair (p,q) maps to the crossing on the
// branch of p (whose pushoff strand is the branch of q).
Identification identify_generators(const ChainComplex& pearly, const ChainComplex& ham);

struct IdentificationReport {
    bool matched = false;
    bool boundary_equal = false;
    bool dsq_equal = false;
    std::vector<int> bijection;
    struct Mismatch {
        int from, to;  // pearly indices
        long long pearly_count, ham_count;
    };
    std::vector<Mismatch> mismatches;
};

IdentificationReport compare_complexes(const ChainComplex& pearly, const ChainComplex& ham,
                                       const Identification& bij);

}  // namespace floercx

#endif
