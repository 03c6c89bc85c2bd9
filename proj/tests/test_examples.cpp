#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercx/identify.hpp"
#include "floercx/pushoff.hpp"

#include <algorithm>
#include <fstream>
#include <set>
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

using ArrowSet = std::set<std::pair<std::string, std::string>>;

ArrowSet arrows(const ChainComplex& cx) {
    ArrowSet out;
    for (int i = 0; i < cx.size(); ++i)
        for (int j = 0; j < cx.size(); ++j)
            if (cx.boundary[i][j]) out.insert({cx.gens[i].label, cx.gens[j].label});
    return out;
}

// The two boundary diagrams of the first worked example: ten generators on
// each side, three of the self-intersection pairs obstructing d^2.
const ArrowSet kExample1Pearly = {
    {"d", "(j,h)"},     {"(j,h)", "(f,g)"}, {"(j,h)", "(b,c)"}, {"(f,g)", "k"},
    {"k", "a"},         {"k", "d"},         {"(c,b)", "(f,g)"}, {"(c,b)", "(h,j)"},
    {"(b,c)", "k"},     {"e", "a"},         {"e", "d"},         {"a", "(g,f)"},
    {"(g,f)", "(h,j)"}, {"(g,f)", "(b,c)"}, {"(h,j)", "e"},
};
const ArrowSet kExample1Ham = {
    {"d", "j"}, {"j", "f"}, {"j", "b"}, {"f", "k"}, {"k", "a"},
    {"k", "d"}, {"c", "f"}, {"c", "h"}, {"b", "k"}, {"e", "a"},
    {"e", "d"}, {"a", "g"}, {"g", "h"}, {"g", "b"}, {"h", "e"},
};

// Second worked example: eight active generators, two isolated pairs.
const ArrowSet kExample2Pearly = {
    {"(e,d)", "f"}, {"f", "i"}, {"f", "a"}, {"i", "(h,g)"},
    {"(g,h)", "j"}, {"j", "a"}, {"j", "i"}, {"a", "(b,c)"},
};
const ArrowSet kExample2Ham = {
    {"e", "f"}, {"f", "i"}, {"f", "a"}, {"i", "h"},
    {"g", "j"}, {"j", "a"}, {"j", "i"}, {"a", "b"},
};

struct Example {
    ChainComplex pearly, ham;
    Identification id;
    IdentificationReport rep;
};

Example run_example(const std::string& fixture) {
    Example ex;
    CurveFile f = load(fixture);
    MorseFunction h = MorseFunction::from_spec(f.morse);
    ex.pearly = build_pearly(f.curve, h);
    Rat delta = transversality_window(f.curve, h);
    Curve push = construct_pushoff(f.curve, h, PushoffConfig{delta / 2});
    ex.ham = build_hamiltonian(f.curve, push);
    ex.id = identify_generators(ex.pearly, ex.ham);
    ex.rep = compare_complexes(ex.pearly, ex.ham, ex.id);
    return ex;
}

}  // namespace

TEST_CASE("example 1: printed pearly and Hamiltonian diagrams, identified") {
    Example ex = run_example("example1.curve");
    CHECK(ex.pearly.size() == 10);
    CHECK(ex.ham.size() == 10);
    CHECK(arrows(ex.pearly) == kExample1Pearly);
    CHECK(arrows(ex.ham) == kExample1Ham);
    CHECK(ex.rep.matched);
    CHECK(ex.rep.boundary_equal);
    CHECK(ex.rep.dsq_equal);
    // The printed letter identification: pairs map to their first letter.
    for (const auto& [pearly_label, ham_label] :
         std::vector<std::pair<std::string, std::string>>{{"(j,h)", "j"},
                                                          {"(f,g)", "f"},
                                                          {"(c,b)", "c"},
                                                          {"(b,c)", "b"},
                                                          {"(g,f)", "g"},
                                                          {"(h,j)", "h"},
                                                          {"a", "a"},
                                                          {"d", "d"},
                                                          {"e", "e"},
                                                          {"k", "k"}}) {
        int i = ex.pearly.find_label(pearly_label);
        REQUIRE(i >= 0);
        CHECK(ex.ham.gens[ex.id.map[i]].label == ham_label);
    }
    // Example 1 is genuinely obstructed.
    CHECK(!boundary_squared(ex.pearly).zero);
}

TEST_CASE("example 2: printed diagrams with the two silent pairs") {
    Example ex = run_example("example2.curve");
    CHECK(ex.pearly.size() == 10);  // 4 critical points + 2 per self-intersection
    CHECK(arrows(ex.pearly) == kExample2Pearly);
    CHECK(arrows(ex.ham) == kExample2Ham);
    CHECK(ex.rep.matched);
    CHECK(ex.rep.boundary_equal);
    CHECK(ex.rep.dsq_equal);
    // (d,e) and (c,b) are generators with no arrows at all, which is why the
    // printed diagrams omit them (together with their partner crossings).
    for (const char* label : {"(d,e)", "(c,b)"}) {
        int i = ex.pearly.find_label(label);
        REQUIRE(i >= 0);
        for (int j = 0; j < ex.pearly.size(); ++j) {
            CHECK(ex.pearly.boundary[i][j] == 0);
            CHECK(ex.pearly.boundary[j][i] == 0);
        }
    }
}
