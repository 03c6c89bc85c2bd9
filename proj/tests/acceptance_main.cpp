// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 4-8 run over a deterministic random corpus.

#include "floercx/corpus.hpp"
#include "floercx/errors.hpp"
#include "floercx/identify.hpp"
#include "floercx/oracle.hpp"
#include "floercx/pushoff.hpp"
#include "floercx/report.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace floercx;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& what, double secs, double budget) {
    bool ok = pass && secs <= budget;
    std::printf("%s criterion-%d: %s (%.2fs, budget %.0fs)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), secs, budget);
    if (!ok) ++g_failures;
}

CurveFile load(const std::string& name) {
    std::ifstream in(std::string(FLOERCX_FIXTURE_DIR) + "/" + name);
    if (!in.good()) throw std::runtime_error("missing fixture " + name);
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
const ArrowSet kExample2Pearly = {
    {"(e,d)", "f"}, {"f", "i"}, {"f", "a"}, {"i", "(h,g)"},
    {"(g,h)", "j"}, {"j", "a"}, {"j", "i"}, {"a", "(b,c)"},
};
const ArrowSet kExample2Ham = {
    {"e", "f"}, {"f", "i"}, {"f", "a"}, {"i", "h"},
    {"g", "j"}, {"j", "a"}, {"j", "i"}, {"a", "b"},
};

struct ExampleRun {
    ChainComplex pearly, ham;
    IdentificationReport rep;
    int expected_gens;
};

ExampleRun run_example(const std::string& fixture) {
    ExampleRun r;
    CurveFile f = load(fixture);
    MorseFunction h = MorseFunction::from_spec(f.morse);
    r.pearly = build_pearly(f.curve, h);
    Rat delta = transversality_window(f.curve, h);
    Curve push = construct_pushoff(f.curve, h, PushoffConfig{delta / 2});
    r.ham = build_hamiltonian(f.curve, push);
    Identification id = identify_generators(r.pearly, r.ham);
    r.rep = compare_complexes(r.pearly, r.ham, id);
    return r;
}

void criterion_example(int number, const std::string& fixture, const ArrowSet& pearly_want,
                       const ArrowSet& ham_want, int gens_want, double budget) {
    auto t0 = Clock::now();
    bool pass = false;
    std::string what = fixture + " reproduction";
    try {
        ExampleRun r = run_example(fixture);
        pass = arrows(r.pearly) == pearly_want && arrows(r.ham) == ham_want &&
               r.pearly.size() == gens_want && r.ham.size() == gens_want && r.rep.matched &&
               r.rep.boundary_equal;
        if (!pass) {
            what += " [";
            if (arrows(r.pearly) != pearly_want) what += " pearly-arrows";
            if (arrows(r.ham) != ham_want) what += " ham-arrows";
            if (r.pearly.size() != gens_want) what += " gen-count";
            if (!r.rep.matched) what += " unmatched";
            if (!r.rep.boundary_equal) what += " boundary";
            what += " ]";
        }
    } catch (const std::exception& e) {
        what += std::string(" [exception: ") + e.what() + "]";
    }
    report(number, pass, what, seconds_since(t0), budget);
}

void criterion3_diamond() {
    auto t0 = Clock::now();
    bool pass = false;
    try {
        CurveFile f = load("diamond.curve");
        MorseFunction h = MorseFunction::height();
        ChainComplex pearly = build_pearly(f.curve, h);
        Rat delta = transversality_window(f.curve, h);
        Curve push = construct_pushoff(f.curve, h, PushoffConfig{delta / 2});
        ChainComplex ham = build_hamiltonian(f.curve, push);
        pass = pearly.size() == 2 && ham.size() == 2 && arrows(pearly).empty() &&
               arrows(ham).empty();
    } catch (const std::exception&) {
    }
    report(3, pass, "embedded-circle sanity (diamond)", seconds_since(t0), 1);
}

void criterion4_oracle(const std::vector<CorpusCurve>& corpus) {
    auto t0 = Clock::now();
    long long mismatches = 0, inconclusive = 0, queries = 0;
    try {
        for (const auto& cc : corpus) {
            ChainComplex pearly = build_pearly(cc.curve, cc.f);
            Arrangement parr = build_arrangement(cc.curve);
            for (int i = 0; i < pearly.size(); ++i) {
                for (int j = 0; j < pearly.size(); ++j) {
                    const Generator& a = pearly.gens[i];
                    const Generator& b = pearly.gens[j];
                    if (a.kind == Generator::Critical && b.kind == Generator::Critical) continue;
                    if (a.kind == Generator::Critical && pearly.crits[a.crit].index != 0)
                        continue;
                    if (b.kind == Generator::Critical && pearly.crits[b.crit].index != 1)
                        continue;
                    PearlCorner px = a.kind == Generator::Critical
                                         ? PearlCorner{PearlCorner::Crit, a.crit, -1, true}
                                         : PearlCorner{PearlCorner::Pair, -1, a.si, a.order_pq};
                    PearlCorner py = b.kind == Generator::Critical
                                         ? PearlCorner{PearlCorner::Crit, b.crit, -1, true}
                                         : PearlCorner{PearlCorner::Pair, -1, b.si, b.order_pq};
                    long long engine = static_cast<long long>(
                        bigons_one_curve(parr, px, py, pearly.crits).size());
                    LabelingProblem prob;
                    prob.arr = &parr;
                    prob.two_curves = false;
                    prob.x = px;
                    prob.y = py;
                    prob.crits = &pearly.crits;
                    OracleResult res = oracle_bigons(prob);
                    ++queries;
                    if (res.inconclusive) {
                        ++inconclusive;  // excluded: bound reached, reported
                        continue;
                    }
                    if (res.count != engine) ++mismatches;
                }
            }
            Curve push = construct_pushoff(cc.curve, cc.f, PushoffConfig{cc.window / 2});
            ChainComplex ham = build_hamiltonian(cc.curve, push);
            for (int i = 0; i < ham.size(); ++i) {
                for (int j = 0; j < ham.size(); ++j) {
                    long long engine =
                        static_cast<long long>(bigons_two_curves(ham.arr, i, j).size());
                    LabelingProblem prob;
                    prob.arr = &ham.arr;
                    prob.two_curves = true;
                    prob.x_crossing = i;
                    prob.y_crossing = j;
                    OracleResult res = oracle_bigons(prob);
                    ++queries;
                    if (res.inconclusive) {
                        ++inconclusive;
                        continue;
                    }
                    if (res.count != engine) ++mismatches;
                }
            }
            auto engine_t = rigid_trajectories(cc.curve, cc.f);
            auto oracle_t = oracle_trajectories(cc.curve, cc.f);
            auto crits = critical_points(cc.curve, cc.f);
            std::vector<std::pair<int, int>> a, b = oracle_t;
            for (const auto& arc : engine_t)
                a.emplace_back(crits[arc.from_cp].vertex, crits[arc.to_cp].vertex);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            if (a != b) ++mismatches;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion-4 exception: %s\n", e.what());
        ++mismatches;
    }
    std::ostringstream what;
    what << "oracle equivalence over " << corpus.size() << " curves, " << queries
         << " queries, " << inconclusive << " inconclusive (excluded)";
    report(4, mismatches == 0, what.str(), seconds_since(t0), 300);
}

void criterion5_identification(const std::vector<CorpusCurve>& corpus) {
    auto t0 = Clock::now();
    int failures = 0;
    try {
        for (const auto& cc : corpus) {
            ChainComplex pearly = build_pearly(cc.curve, cc.f);
            for (Rat frac : {Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
                Curve push = construct_pushoff(cc.curve, cc.f, PushoffConfig{cc.window * frac});
                ChainComplex ham = build_hamiltonian(cc.curve, push);
                Identification id = identify_generators(pearly, ham);
                IdentificationReport rep = compare_complexes(pearly, ham, id);
                if (!(rep.matched && rep.boundary_equal && rep.dsq_equal)) {
                    ++failures;
                    std::fprintf(stderr, "criterion-5 failure on %s at eps=%s\n",
                                 cc.curve.name.c_str(), rat_str(cc.window * frac).c_str());
                }
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion-5 exception: %s\n", e.what());
        ++failures;
    }
    std::ostringstream what;
    what << "identification property suite over " << corpus.size() << " curves x 3 epsilons";
    report(5, failures == 0, what.str(), seconds_since(t0), 300);
}

void criterion6_continuation(const std::vector<CorpusCurve>& corpus) {
    auto t0 = Clock::now();
    int failures = 0;
    try {
        for (const auto& cc : corpus) {
            ContinuationTrack tr =
                continuation_track(cc.curve, cc.f, cc.window * 3 / 4, cc.window / 4, 8);
            if (!tr.events.empty() || !tr.counts_constant) {
                ++failures;
                std::fprintf(stderr, "criterion-6 failure on %s\n", cc.curve.name.c_str());
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion-6 exception: %s\n", e.what());
        ++failures;
    }
    std::ostringstream what;
    what << "continuation stability over " << corpus.size() << " curves x 8 samples";
    report(6, failures == 0, what.str(), seconds_since(t0), 120);
}

void criterion7_pruning(const std::vector<CorpusCurve>& corpus) {
    auto t0 = Clock::now();
    int violations = 0;
    try {
        for (const auto& cc : corpus) {
            ChainComplex cx = build_pearly(cc.curve, cc.f);
            for (int i = 0; i < cx.size(); ++i) {
                for (int j = 0; j < cx.size(); ++j) {
                    if (!cx.boundary[i][j]) continue;
                    const Generator& a = cx.gens[i];
                    const Generator& b = cx.gens[j];
                    if (a.kind == Generator::Critical && cx.crits[a.crit].index == 1 &&
                        b.kind == Generator::Pair)
                        ++violations;
                    if (a.kind == Generator::Pair && b.kind == Generator::Critical &&
                        cx.crits[b.crit].index == 0)
                        ++violations;
                }
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion-7 exception: %s\n", e.what());
        ++violations;
    }
    report(7, violations == 0, "pruning zero-blocks across the corpus", seconds_since(t0), 300);
}

void criterion8_linearity(const std::vector<CorpusCurve>& corpus) {
    auto t0 = Clock::now();
    int failures = 0;
    try {
        for (const auto& cc : corpus) {
            Rat eps = cc.window / 2;
            for (Rat a : {Rat(1, 2), Rat(1, 4)}) {
                MorseFunction fa = cc.f.scaled(cc.curve, a);
                Curve left = construct_pushoff(cc.curve, fa, PushoffConfig{eps});
                Curve right = construct_pushoff(cc.curve, cc.f, PushoffConfig{a * eps});
                if (!(left.verts == right.verts)) ++failures;
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion-8 exception: %s\n", e.what());
        ++failures;
    }
    report(8, failures == 0, "pushoff linearity under f-rescaling", seconds_since(t0), 300);
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion9_determinism() {
    auto t0 = Clock::now();
    bool pass = false;
    std::string tool = FLOERCX_TOOL_PATH;
    std::string fixture = std::string(FLOERCX_FIXTURE_DIR) + "/example1.curve";
    try {
        std::string base = "/tmp/floercx_det_";
        for (int run = 0; run < 2; ++run) {
            std::string tag = base + std::to_string(run);
            std::string cmd = tool + " compare --format json -o " + tag + ".json " + fixture +
                              " && " + tool + " render --complex hamiltonian -o " + tag +
                              ".svg " + fixture;
            if (std::system(cmd.c_str()) != 0) throw std::runtime_error("pipeline run failed");
        }
        pass = slurp_file(base + "0.json") == slurp_file(base + "1.json") &&
               slurp_file(base + "0.svg") == slurp_file(base + "1.svg") &&
               !slurp_file(base + "0.json").empty() && !slurp_file(base + "0.svg").empty();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "criterion-9 exception: %s\n", e.what());
    }
    report(9, pass, "byte-identical repeated pipeline runs on example 1", seconds_since(t0), 60);
}

}  // namespace

int main() {
    criterion_example(1, "example1.curve", kExample1Pearly, kExample1Ham, 10, 5);
    criterion_example(2, "example2.curve", kExample2Pearly, kExample2Ham, 10, 5);
    criterion3_diamond();

    std::vector<CorpusCurve> corpus;
    try {
        corpus = generate_corpus(25, 20250811ull);
        int with_sis = 0;
        for (const auto& cc : corpus) with_sis += cc.n_sis > 0;
        std::printf("corpus: %zu curves, %d with self-intersections\n", corpus.size(), with_sis);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "corpus generation failed: %s\n", e.what());
        g_failures += 5;
        return 1;
    }
    criterion4_oracle(corpus);
    criterion5_identification(corpus);
    criterion6_continuation(corpus);
    criterion7_pruning(corpus);
    criterion8_linearity(corpus);
    criterion9_determinism();

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria PASSED\n");
    return 0;
}
