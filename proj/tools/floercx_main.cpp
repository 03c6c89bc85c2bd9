// Command line frontend: builds pearly and Hamiltonian Floer chain complexes
// of immersed plane curves, verifies their identification, and emits
// text/JSON/DOT/SVG reports.

#include <CLI11.hpp>

#include "floercx/corpus.hpp"
#include "floercx/errors.hpp"
#include "floercx/oracle.hpp"
#include "floercx/pushoff.hpp"
#include "floercx/render.hpp"
#include "floercx/report.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace floercx;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitGenericity = 3;
constexpr int kExitWindow = 4;
constexpr int kExitMismatch = 5;

struct Options {
    std::string input;
    std::string epsilon;
    bool auto_epsilon = false;
    std::string format = "text";
    std::string out;
    int steps = 8;
    std::string eps_hi, eps_lo;
    bool no_pushoff = false;
    std::string overlay = "none";
    std::string show_bigon;
};

CurveFile load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_curve_file(ss.str());
}

Rat parse_rat_flag(const std::string& text, const std::string& flag) {
    auto r = parse_rational(text);
    if (!r) throw ParseError("flag " + flag + " expects a rational, got '" + text + "'");
    return *r;
}

Rat resolve_epsilon(const Options& opt, const Curve& c, const MorseFunction& f) {
    if (!opt.epsilon.empty()) return parse_rat_flag(opt.epsilon, "--epsilon");
    // --auto-epsilon (also the default when nothing is given): half the
    // certified transversality window.
    return transversality_window(c, f) / 2;
}

void emit(const Options& opt, const std::string& payload, const std::string& default_name) {
    std::string target = opt.out;
    if (target.empty()) {
        const char* dir = std::getenv("FLOERCX_OUT_DIR");
        if (dir && *dir) target = std::string(dir) + "/" + default_name;
    }
    if (target.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(target, std::ios::binary);
    if (!out.good()) throw std::runtime_error("cannot write output file '" + target + "'");
    out << payload;
}

MorseFunction morse_of(const CurveFile& file) { return MorseFunction::from_spec(file.morse); }

int run_pearly(const Options& opt) {
    CurveFile file = load_input(opt.input);
    ChainComplex cx = build_pearly(file.curve, morse_of(file));
    if (opt.format == "json")
        emit(opt, complex_report_json(cx), "pearly.json");
    else if (opt.format == "dot")
        emit(opt, complex_dot(cx), "pearly.dot");
    else
        emit(opt, complex_report_text(cx), "pearly.txt");
    return kExitOk;
}

int run_hamiltonian(const Options& opt) {
    CurveFile file = load_input(opt.input);
    MorseFunction f = morse_of(file);
    Rat eps = resolve_epsilon(opt, file.curve, f);
    Curve push = construct_pushoff(file.curve, f, PushoffConfig{eps});
    ChainComplex cx = build_hamiltonian(file.curve, push);
    if (opt.format == "json")
        emit(opt, complex_report_json(cx), "hamiltonian.json");
    else if (opt.format == "dot")
        emit(opt, complex_dot(cx), "hamiltonian.dot");
    else
        emit(opt, complex_report_text(cx), "hamiltonian.txt");
    return kExitOk;
}

int run_compare(const Options& opt) {
    CurveFile file = load_input(opt.input);
    MorseFunction f = morse_of(file);
    Rat eps = resolve_epsilon(opt, file.curve, f);
    ChainComplex pearly = build_pearly(file.curve, f);
    Curve push = construct_pushoff(file.curve, f, PushoffConfig{eps});
    ChainComplex ham = build_hamiltonian(file.curve, push);
    Identification id = identify_generators(pearly, ham);
    IdentificationReport rep = compare_complexes(pearly, ham, id);
    if (opt.format == "json")
        emit(opt, compare_report_json(pearly, ham, id, rep), "compare.json");
    else if (opt.format == "dot")
        emit(opt, compare_dot(pearly, ham, rep), "compare.dot");
    else
        emit(opt, compare_report_text(pearly, ham, id, rep), "compare.txt");
    if (!rep.matched || !rep.boundary_equal) {
        std::cerr << "floercx: error[mismatch]: identification failed\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_window(const Options& opt) {
    CurveFile file = load_input(opt.input);
    MorseFunction f = morse_of(file);
    Rat reach = reach_estimate(file.curve);
    Rat delta = transversality_window(file.curve, f);
    if (opt.format == "json") {
        emit(opt, window_report_json(file.curve.name, reach, delta), "window.json");
    } else {
        std::ostringstream ss;
        ss << "reach_estimate " << rat_str(reach) << "\n"
           << "transversality_window " << rat_str(delta) << "\n";
        emit(opt, ss.str(), "window.txt");
    }
    return kExitOk;
}

int run_continuation(const Options& opt) {
    CurveFile file = load_input(opt.input);
    MorseFunction f = morse_of(file);
    Rat delta = transversality_window(file.curve, f);
    Rat hi = opt.eps_hi.empty() ? delta * 3 / 4 : parse_rat_flag(opt.eps_hi, "--eps-hi");
    Rat lo = opt.eps_lo.empty() ? delta / 4 : parse_rat_flag(opt.eps_lo, "--eps-lo");
    ContinuationTrack track = continuation_track(file.curve, f, hi, lo, opt.steps);
    emit(opt, continuation_report_json(track), "continuation.json");
    return kExitOk;
}

int run_oracle_check(const Options& opt) {
    CurveFile file = load_input(opt.input);
    MorseFunction f = morse_of(file);
    std::vector<OracleDiff> diffs;
    bool all_match = true;
    DiscSearchCfg cfg;

    ChainComplex pearly = build_pearly(file.curve, f);
    Arrangement parr = build_arrangement(file.curve);
    auto query_label = [&](const ChainComplex& cx, int i, int j) {
        return cx.gens[i].label + " -> " + cx.gens[j].label;
    };
    for (int i = 0; i < pearly.size(); ++i) {
        for (int j = 0; j < pearly.size(); ++j) {
            const Generator& a = pearly.gens[i];
            const Generator& b = pearly.gens[j];
            if (a.kind == Generator::Critical && b.kind == Generator::Critical) continue;
            if (a.kind == Generator::Critical && pearly.crits[a.crit].index != 0) continue;
            if (b.kind == Generator::Critical && pearly.crits[b.crit].index != 1) continue;
            PearlCorner px = a.kind == Generator::Critical
                                 ? PearlCorner{PearlCorner::Crit, a.crit, -1, true}
                                 : PearlCorner{PearlCorner::Pair, -1, a.si, a.order_pq};
            PearlCorner py = b.kind == Generator::Critical
                                 ? PearlCorner{PearlCorner::Crit, b.crit, -1, true}
                                 : PearlCorner{PearlCorner::Pair, -1, b.si, b.order_pq};
            long long engine =
                static_cast<long long>(bigons_one_curve(parr, px, py, pearly.crits, cfg).size());
            LabelingProblem prob;
            prob.arr = &parr;
            prob.two_curves = false;
            prob.x = px;
            prob.y = py;
            prob.crits = &pearly.crits;
            OracleResult res = oracle_bigons(prob);
            if (res.count != engine || res.inconclusive) {
                all_match &= (res.count == engine);
                diffs.push_back({query_label(pearly, i, j), engine, res.count,
                                 res.inconclusive});
            }
        }
    }
    // Trajectory cross-check.
    {
        auto engine = rigid_trajectories(file.curve, f);
        auto oracle = oracle_trajectories(file.curve, f);
        std::vector<std::pair<int, int>> a, b = oracle;
        for (const auto& arc : engine)
            a.emplace_back(pearly.crits[arc.from_cp].vertex, pearly.crits[arc.to_cp].vertex);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            all_match = false;
            diffs.push_back({"trajectories", static_cast<long long>(a.size()),
                             static_cast<long long>(b.size()), false});
        }
    }

    Rat eps = resolve_epsilon(opt, file.curve, f);
    Curve push = construct_pushoff(file.curve, f, PushoffConfig{eps});
    ChainComplex ham = build_hamiltonian(file.curve, push);
    for (int i = 0; i < ham.size(); ++i) {
        for (int j = 0; j < ham.size(); ++j) {
            long long engine = static_cast<long long>(
                bigons_two_curves(ham.arr, i, j, cfg).size());
            LabelingProblem prob;
            prob.arr = &ham.arr;
            prob.two_curves = true;
            prob.x_crossing = i;
            prob.y_crossing = j;
            OracleResult res = oracle_bigons(prob);
            if (res.count != engine || res.inconclusive) {
                all_match &= (res.count == engine);
                diffs.push_back({query_label(ham, i, j), engine, res.count, res.inconclusive});
            }
        }
    }
    emit(opt, oracle_diff_report_json(diffs, all_match), "oracle-check.json");
    if (!all_match) {
        std::cerr << "floercx: error[mismatch]: oracle disagreement\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_render(const Options& opt) {
    CurveFile file = load_input(opt.input);
    MorseFunction f = morse_of(file);
    RenderScene scene;
    scene.curve = &file.curve;
    Curve push;
    ChainComplex cx;
    bool have_push = false;
    if (!opt.no_pushoff) {
        Rat eps = resolve_epsilon(opt, file.curve, f);
        push = construct_pushoff(file.curve, f, PushoffConfig{eps});
        scene.pushoff = &push;
        have_push = true;
    }
    std::vector<const Bigon*> picks;
    if (opt.overlay == "pearly") {
        cx = build_pearly(file.curve, f);
        scene.complex = &cx;
        scene.arr = &cx.arr;
    } else if (opt.overlay == "hamiltonian") {
        if (!have_push) throw ParseError("--complex hamiltonian needs a pushoff");
        cx = build_hamiltonian(file.curve, push);
        scene.complex = &cx;
        scene.arr = &cx.arr;
    }
    if (!opt.show_bigon.empty()) {
        if (!scene.complex) throw ParseError("--show-bigons needs --complex");
        auto colon = opt.show_bigon.find(':');
        if (colon == std::string::npos)
            throw ParseError("--show-bigons expects FROM:TO generator labels");
        int i = cx.find_label(opt.show_bigon.substr(0, colon));
        int j = cx.find_label(opt.show_bigon.substr(colon + 1));
        if (i < 0 || j < 0) throw ParseError("--show-bigons: unknown generator label");
        auto it = cx.logs.find({i, j});
        if (it != cx.logs.end())
            for (const auto& e : it->second)
                if (e.kind == DiscLogEntry::Disc) picks.push_back(&e.bigon);
        scene.highlights = picks;
    }
    emit(opt, render_svg(scene), "render.svg");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"floercx: pearly and Hamiltonian Floer chain complexes of immersed plane curves"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_eps) {
        sub->add_option("input", opt.input, "curve file")->required();
        sub->add_option("-o,--out", opt.out, "output path (default: stdout)");
        if (with_eps) {
            sub->add_option("--epsilon", opt.epsilon, "pushoff displacement (rational)");
            sub->add_flag("--auto-epsilon", opt.auto_epsilon,
                          "use half the transversality window (default)");
        }
    };

    CLI::App* pearly = app.add_subcommand("pearly", "pearly-tree chain complex");
    add_common(pearly, false);
    pearly->add_option("--format", opt.format, "text|json|dot");

    CLI::App* ham = app.add_subcommand("hamiltonian", "curve-vs-pushoff chain complex");
    add_common(ham, true);
    ham->add_option("--format", opt.format, "text|json|dot");

    CLI::App* compare = app.add_subcommand("compare", "verify the canonical identification");
    add_common(compare, true);
    compare->add_option("--format", opt.format, "text|json|dot");

    CLI::App* window = app.add_subcommand("window", "certified transversality window");
    add_common(window, false);
    window->add_option("--format", opt.format, "text|json");

    CLI::App* cont = app.add_subcommand("continuation", "track generators along epsilon");
    add_common(cont, false);
    cont->add_option("--steps,--continuation", opt.steps, "number of samples (>= 2)");
    cont->add_option("--eps-hi", opt.eps_hi, "upper epsilon (default 3/4 window)");
    cont->add_option("--eps-lo", opt.eps_lo, "lower epsilon (default 1/4 window)");

    CLI::App* oracle = app.add_subcommand("oracle-check", "diff the tracer against the oracle");
    add_common(oracle, true);

    CLI::App* render = app.add_subcommand("render", "deterministic SVG figure");
    add_common(render, true);
    render->add_flag("--no-pushoff", opt.no_pushoff, "draw the curve only");
    render->add_option("--complex", opt.overlay, "none|pearly|hamiltonian");
    render->add_option("--show-bigons", opt.show_bigon, "FROM:TO highlights the discs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (pearly->parsed()) return run_pearly(opt);
        if (ham->parsed()) return run_hamiltonian(opt);
        if (compare->parsed()) return run_compare(opt);
        if (window->parsed()) return run_window(opt);
        if (cont->parsed()) return run_continuation(opt);
        if (oracle->parsed()) return run_oracle_check(opt);
        if (render->parsed()) return run_render(opt);
    } catch (const ParseError& e) {
        std::cerr << "floercx: error[parse]: " << e.what();
        if (e.line) std::cerr << " (line " << e.line << ", column " << e.column << ")";
        std::cerr << "\n";
        return kExitParse;
    } catch (const GenericityError& e) {
        std::cerr << "floercx: error[genericity]: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const WindowError& e) {
        std::cerr << "floercx: error[window]: " << e.what() << "\n";
        return kExitWindow;
    } catch (const MatchError& e) {
        std::cerr << "floercx: error[mismatch]: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "floercx: error[internal]: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
