#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "floercx/errors.hpp"
#include "floercx/morse.hpp"
#include "floercx/intersect.hpp"

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
}  // namespace

TEST_CASE("diamond has a minimum at the top and a maximum at the bottom") {
    CurveFile f = load("diamond.curve");
    auto crits = critical_points(f.curve, MorseFunction::height());
    REQUIRE(crits.size() == 2);
    // f = -y: the top vertex (0,1) has f = -1, a minimum (index 0).
    for (const auto& cp : crits) {
        if (f.curve.vertex(cp.vertex) == Point{Rat(0), Rat(1)}) {
            CHECK(cp.index == 0);
            CHECK(cp.value == Rat(-1));
            CHECK(cp.label == "min");
        } else {
            CHECK(f.curve.vertex(cp.vertex) == Point{Rat(0), Rat(-1)});
            CHECK(cp.index == 1);
            CHECK(cp.value == Rat(1));
            CHECK(cp.label == "max");
        }
    }
}

TEST_CASE("figure-eight critical points from the vertex scan") {
    CurveFile f = load("fig8.curve");
    // Independent oracle: scan vertex y-values 0,1,-1,0,1,-1 for strict
    // local extrema.
    auto crits = critical_points(f.curve, MorseFunction::height());
    REQUIRE(crits.size() == 4);
    int idx0 = 0, idx1 = 0;
    for (const auto& cp : crits) {
        Point at = f.curve.vertex(cp.vertex);
        if (cp.index == 0) {
            ++idx0;
            CHECK(at.y == Rat(1));  // tops are minima of f = -y
        } else {
            ++idx1;
            CHECK(at.y == Rat(-1));
        }
    }
    CHECK(idx0 == 2);
    CHECK(idx1 == 2);
}

TEST_CASE("critical points alternate index around the curve") {
    CurveFile f = load("fig8.curve");
    auto crits = critical_points(f.curve, MorseFunction::height());
    for (size_t k = 0; k < crits.size(); ++k)
        CHECK(crits[k].index != crits[(k + 1) % crits.size()].index);
}

TEST_CASE("horizontal edge under height mode is rejected, not perturbed") {
    CurveFile f = parse_curve_file("v 0 0\nv 1 0\nv 1 1\nv 0 1");
    CHECK_THROWS_AS(critical_points(f.curve, MorseFunction::height()), GenericityError);
    auto rep = validate_morse(f.curve, MorseFunction::height(), {});
    CHECK(!rep.ok);
}

TEST_CASE("validate_morse accepts both fixtures") {
    for (const char* name : {"diamond.curve", "fig8.curve"}) {
        CurveFile f = load(name);
        auto sis = self_intersections(f.curve);
        CHECK(validate_morse(f.curve, MorseFunction::height(), sis).ok);
    }
}

TEST_CASE("vertex-values mode drives the same machinery") {
    CurveFile f = load("diamond.curve");
    MorseFunction g;
    g.mode = MorseSpec::VertexValues;
    g.values = {Rat(1), Rat(0), Rat(-1), Rat(0)};  // same shape as -y
    auto crits = critical_points(f.curve, g);
    REQUIRE(crits.size() == 2);
    auto arcs = rigid_trajectories(f.curve, g);
    CHECK(arcs.size() == 2);
}

TEST_CASE("diamond trajectories: both sides flow from the bottom to the top") {
    CurveFile f = load("diamond.curve");
    auto crits = critical_points(f.curve, MorseFunction::height());
    auto arcs = rigid_trajectories(f.curve, MorseFunction::height());
    REQUIRE(arcs.size() == 2);
    for (const auto& a : arcs) {
        CHECK(crits[a.from_cp].index == 1);
        CHECK(crits[a.to_cp].index == 0);
        // f strictly decreases along the arc, segment by segment.
        for (size_t i = 0; i + 1 < a.pts.size(); ++i)
            CHECK(-a.pts[i].y > -a.pts[i + 1].y);
    }
}

TEST_CASE("figure-eight rigid trajectories match the monotone runs") {
    CurveFile f = load("fig8.curve");
    // Oracle: partition the cyclic y-sequence 0,1,-1,0,1,-1 into monotone
    // runs; there are four.
    auto arcs = rigid_trajectories(f.curve, MorseFunction::height());
    CHECK(arcs.size() == 4);
    auto crits = critical_points(f.curve, MorseFunction::height());
    // Every index-1 point starts exactly two arcs; every index-0 ends two.
    std::vector<int> from_count(crits.size(), 0), to_count(crits.size(), 0);
    for (const auto& a : arcs) {
        from_count[a.from_cp]++;
        to_count[a.to_cp]++;
    }
    for (size_t k = 0; k < crits.size(); ++k) {
        if (crits[k].index == 1) {
            CHECK(from_count[k] == 2);
            CHECK(to_count[k] == 0);
        } else {
            CHECK(from_count[k] == 0);
            CHECK(to_count[k] == 2);
        }
    }
}
