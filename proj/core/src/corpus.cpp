#include "floercx/corpus.hpp"

#include "floercx/errors.hpp"
#include "floercx/pushoff.hpp"

#include <random>

namespace floercx {

std::vector<CorpusCurve> generate_corpus(int count, unsigned long long seed, int max_sis) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusCurve> out;
    std::uniform_int_distribution<int> nverts(5, 9);
    std::uniform_int_distribution<int> coord(-12, 12);  // halves of this value
    long long attempts = 0;
    const long long max_attempts = 2'000'000;
    while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
        ++attempts;
        Curve c;
        int n = nverts(rng);
        for (int i = 0; i < n; ++i)
            c.verts.push_back(Point{Rat(coord(rng), 2), Rat(coord(rng), 2)});
        if (!validate_immersion(c).ok) continue;
        try {
            auto sis = self_intersections(c);
            if (static_cast<int>(sis.size()) > max_sis) continue;
            MorseFunction f = MorseFunction::height();
            if (!validate_morse(c, f, sis).ok) continue;
            CorpusCurve cc;
            cc.curve = c;
            cc.f = f;
            cc.n_sis = static_cast<int>(sis.size());
            cc.window = transversality_window(c, f);
            cc.curve.name = "corpus" + std::to_string(out.size());
            out.push_back(std::move(cc));
        } catch (const GenericityError&) {
            continue;
        } catch (const WindowError&) {
            continue;
        } catch (const MatchError&) {
            continue;
        }
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("generate_corpus: sampler exhausted its attempt budget");
    return out;
}

}  // namespace floercx
