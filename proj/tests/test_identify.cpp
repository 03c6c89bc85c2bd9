#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercx/identify.hpp"
#include "floercx/pushoff.hpp"

#include <fstream>
#include <sstream>

using namespace floercx;

namespace {
CurveFile load(const std::string& name) {
    std::ifstream in(std::string(FLOERCX_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str());
}

struct Built {
    ChainComplex pearly, ham;
};

Built build_pair(const CurveFile& f, const Rat& eps) {
    Built b;
    MorseFunction h = MorseFunction::height();
    b.pearly = build_pearly(f.curve, h);
    Curve push = construct_pushoff(f.curve, h, PushoffConfig{eps});
    b.ham = build_hamiltonian(f.curve, push);
    return b;
}
}  // namespace

TEST_CASE("diamond: critical points map to the crossings at their locations") {
    CurveFile f = load("diamond.curve");
    Rat delta = transversality_window(f.curve, MorseFunction::height());
    Built b = build_pair(f, delta / 2);
    Identification id = identify_generators(b.pearly, b.ham);
    REQUIRE(id.matched);
    for (int i = 0; i < b.pearly.size(); ++i)
        CHECK(b.pearly.gens[i].at == b.ham.gens[id.map[i]].at);
    IdentificationReport rep = compare_complexes(b.pearly, b.ham, id);
    CHECK(rep.matched);
    CHECK(rep.boundary_equal);
    CHECK(rep.dsq_equal);
}

TEST_CASE("figure-eight: six generators identified, boundaries agree") {
    CurveFile f = load("fig8.curve");
    Rat delta = transversality_window(f.curve, MorseFunction::height());
    Built b = build_pair(f, delta / 2);
    REQUIRE(b.pearly.size() == 6);
    REQUIRE(b.ham.size() == 6);
    Identification id = identify_generators(b.pearly, b.ham);
    REQUIRE(id.matched);
    IdentificationReport rep = compare_complexes(b.pearly, b.ham, id);
    CHECK(rep.boundary_equal);
    CHECK(rep.dsq_equal);
    // The pair generators land on the crossings labeled by their first
    // letter: (p,q) on the branch of p.
    int pq = b.pearly.find_label("(p,q)");
    REQUIRE(pq >= 0);
    CHECK(b.ham.gens[id.map[pq]].label == "p");
    int qp = b.pearly.find_label("(q,p)");
    CHECK(b.ham.gens[id.map[qp]].label == "q");
}

TEST_CASE("identification is stable across the window") {
    CurveFile f = load("fig8.curve");
    Rat delta = transversality_window(f.curve, MorseFunction::height());
    for (Rat eps : {delta / 4, delta / 2, delta * 3 / 4}) {
        Built b = build_pair(f, eps);
        Identification id = identify_generators(b.pearly, b.ham);
        REQUIRE(id.matched);
        IdentificationReport rep = compare_complexes(b.pearly, b.ham, id);
        CHECK(rep.boundary_equal);
        CHECK(rep.dsq_equal);
    }
}

TEST_CASE("relabeling invariance: permuting storage changes nothing") {
    CurveFile f = load("fig8.curve");
    Rat delta = transversality_window(f.curve, MorseFunction::height());
    Built b = build_pair(f, delta / 2);
    // Permute the pearly generators by rotating the list.
    int n = b.pearly.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = (i + 2) % n;
    ChainComplex p2 = b.pearly;
    for (int i = 0; i < n; ++i) p2.gens[perm[i]] = b.pearly.gens[i];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            p2.boundary[perm[i]][perm[j]] = b.pearly.boundary[i][j];
            p2.counts[perm[i]][perm[j]] = b.pearly.counts[i][j];
        }
    Identification id = identify_generators(p2, b.ham);
    REQUIRE(id.matched);
    IdentificationReport rep = compare_complexes(p2, b.ham, id);
    CHECK(rep.boundary_equal);
    CHECK(rep.dsq_equal);
}

TEST_CASE("a deliberately broken pairing is reported, not silently accepted") {
    CurveFile f = load("fig8.curve");
    Rat delta = transversality_window(f.curve, MorseFunction::height());
    Built b = build_pair(f, delta / 2);
    Identification id = identify_generators(b.pearly, b.ham);
    REQUIRE(id.matched);
    std::swap(id.map[0], id.map[1]);  // corrupt the bijection
    IdentificationReport rep = compare_complexes(b.pearly, b.ham, id);
    CHECK(!rep.boundary_equal);
    CHECK(!rep.mismatches.empty());
}
