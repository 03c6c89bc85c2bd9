#ifndef FLOERCX_CORPUS_HPP
#define FLOERCX_CORPUS_HPP

#include "floercx/morse.hpp"
#include "floercx/intersect.hpp"

#include <vector>

namespace floercx {

struct CorpusCurve {
    Curve curve;
    MorseFunction f;
    Rat window;
    int n_sis = 0;
};

// Deterministic rejection sampler for generic immersed test curves: random
// half-integer polygons that pass validate_immersion, have at most max_sis
// transverse self-intersections, admit the height function as PL Morse data,
// and own a certified transversality window.
std::vector<CorpusCurve> generate_corpus(int count, unsigned long long seed, int max_sis = 6);

}  // namespace floercx

#endif
