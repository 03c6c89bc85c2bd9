#include "floercx/report.hpp"

#include <json.hpp>

#include <sstream>

namespace floercx {

using Json = nlohmann::ordered_json;

namespace {

const char* kind_name(Generator::Kind k) {
    switch (k) {
        case Generator::Critical: return "critical";
        case Generator::Pair: return "pair";
        default: return "crossing";
    }
}

Json generator_json(const ChainComplex& cx, int i) {
    const Generator& g = cx.gens[i];
    Json j;
    j["label"] = g.label;
    j["kind"] = kind_name(g.kind);
    j["at"] = {rat_str(g.at.x), rat_str(g.at.y)};
    if (g.kind == Generator::Critical) j["index"] = cx.crits[g.crit].index;
    return j;
}

Json boundary_json(const ChainComplex& cx) {
    Json cols = Json::object();
    for (int i = 0; i < cx.size(); ++i) {
        Json targets = Json::array();
        for (int j = 0; j < cx.size(); ++j)
            if (cx.boundary[i][j]) targets.push_back(cx.gens[j].label);
        if (!targets.empty()) cols[cx.gens[i].label] = targets;
    }
    return cols;
}

Json dsq_json(const ChainComplex& cx) {
    DsqReport d = boundary_squared(cx);
    Json entries = Json::array();
    for (auto [i, j] : d.nonzero)
        entries.push_back({cx.gens[i].label, cx.gens[j].label});
    Json out;
    out["zero"] = d.zero;
    out["entries"] = entries;
    return out;
}

}  // namespace

std::string complex_report_text(const ChainComplex& cx) {
    std::ostringstream out;
    out << (cx.flavor == ChainComplex::Pearly ? "pearly" : "hamiltonian") << " complex: "
        << cx.size() << " generators\n";
    for (int i = 0; i < cx.size(); ++i) {
        out << "  d(" << cx.gens[i].label << ") =";
        bool any = false;
        for (int j = 0; j < cx.size(); ++j) {
            if (cx.boundary[i][j]) {
                out << (any ? " + " : " ") << cx.gens[j].label;
                any = true;
            }
        }
        if (!any) out << " 0";
        out << "\n";
    }
    DsqReport d = boundary_squared(cx);
    out << "  d^2 " << (d.zero ? "= 0" : "!= 0 (obstructed)") << "\n";
    for (auto [i, j] : d.nonzero)
        out << "  d^2(" << cx.gens[i].label << ") contains " << cx.gens[j].label << "\n";
    return out.str();
}

std::string complex_report_json(const ChainComplex& cx) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["flavor"] = cx.flavor == ChainComplex::Pearly ? "pearly" : "hamiltonian";
    j["generators"] = Json::array();
    for (int i = 0; i < cx.size(); ++i) j["generators"].push_back(generator_json(cx, i));
    j["boundary"] = boundary_json(cx);
    j["d_squared"] = dsq_json(cx);
    return j.dump(2) + "\n";
}

std::string complex_dot(const ChainComplex& cx) {
    std::ostringstream out;
    out << "digraph " << (cx.flavor == ChainComplex::Pearly ? "pearly" : "hamiltonian") << " {\n";
    out << "  rankdir=LR;\n";
    for (int i = 0; i < cx.size(); ++i) out << "  \"" << cx.gens[i].label << "\";\n";
    for (int i = 0; i < cx.size(); ++i)
        for (int j = 0; j < cx.size(); ++j)
            if (cx.boundary[i][j])
                out << "  \"" << cx.gens[i].label << "\" -> \"" << cx.gens[j].label << "\";\n";
    out << "}\n";
    return out.str();
}

std::string compare_report_text(const ChainComplex& pearly, const ChainComplex& ham,
                                const Identification& id, const IdentificationReport& rep) {
    std::ostringstream out;
    out << "identification: matched = " << (rep.matched ? "true" : "false")
        << ", boundary_equal = " << (rep.boundary_equal ? "true" : "false")
        << ", dsq_equal = " << (rep.dsq_equal ? "true" : "false") << "\n";
    for (const auto& p : id.problems) out << "  problem: " << p << "\n";
    if (rep.matched) {
        for (int i = 0; i < pearly.size(); ++i)
            out << "  " << pearly.gens[i].label << " <-> " << ham.gens[rep.bijection[i]].label
                << "\n";
    }
    for (const auto& m : rep.mismatches)
        out << "  mismatch d(" << pearly.gens[m.from].label << ") -> "
            << pearly.gens[m.to].label << ": pearly count " << m.pearly_count
            << ", hamiltonian count " << m.ham_count << "\n";
    return out.str();
}

std::string compare_report_json(const ChainComplex& pearly, const ChainComplex& ham,
                                const Identification& id, const IdentificationReport& rep) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["matched"] = rep.matched;
    j["boundary_equal"] = rep.boundary_equal;
    j["dsq_equal"] = rep.dsq_equal;
    j["problems"] = id.problems;
    Json bij = Json::object();
    if (rep.matched)
        for (int i = 0; i < pearly.size(); ++i)
            bij[pearly.gens[i].label] = ham.gens[rep.bijection[i]].label;
    j["bijection"] = bij;
    Json mism = Json::array();
    for (const auto& m : rep.mismatches) {
        Json e;
        e["from"] = pearly.gens[m.from].label;
        e["to"] = pearly.gens[m.to].label;
        e["pearly_count"] = m.pearly_count;
        e["hamiltonian_count"] = m.ham_count;
        mism.push_back(e);
    }
    j["mismatches"] = mism;
    j["pearly"] = Json::parse(complex_report_json(pearly));
    j["hamiltonian"] = Json::parse(complex_report_json(ham));
    return j.dump(2) + "\n";
}

std::string compare_dot(const ChainComplex& pearly, const ChainComplex& ham,
                        const IdentificationReport& rep) {
    std::ostringstream out;
    out << "digraph comparison {\n  rankdir=LR;\n";
    out << "  subgraph cluster_pearly {\n    label=\"pearly\";\n";
    for (int i = 0; i < pearly.size(); ++i)
        out << "    \"P:" << pearly.gens[i].label << "\" [label=\"" << pearly.gens[i].label
            << "\"];\n";
    for (int i = 0; i < pearly.size(); ++i)
        for (int j = 0; j < pearly.size(); ++j)
            if (pearly.boundary[i][j])
                out << "    \"P:" << pearly.gens[i].label << "\" -> \"P:"
                    << pearly.gens[j].label << "\";\n";
    out << "  }\n  subgraph cluster_hamiltonian {\n    label=\"hamiltonian\";\n";
    for (int i = 0; i < ham.size(); ++i)
        out << "    \"H:" << ham.gens[i].label << "\" [label=\"" << ham.gens[i].label
            << "\"];\n";
    for (int i = 0; i < ham.size(); ++i)
        for (int j = 0; j < ham.size(); ++j)
            if (ham.boundary[i][j])
                out << "    \"H:" << ham.gens[i].label << "\" -> \"H:" << ham.gens[j].label
                    << "\";\n";
    out << "  }\n";
    if (rep.matched)
        for (int i = 0; i < pearly.size(); ++i)
            out << "  \"P:" << pearly.gens[i].label << "\" -> \"H:"
                << ham.gens[rep.bijection[i]].label << "\" [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

std::string window_report_json(const std::string& name, const Rat& reach, const Rat& delta) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["curve"] = name;
    j["reach_estimate"] = rat_str(reach);
    j["transversality_window"] = rat_str(delta);
    return j.dump(2) + "\n";
}

std::string continuation_report_json(const ContinuationTrack& track) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["epsilons"] = Json::array();
    for (const Rat& e : track.epsilons) j["epsilons"].push_back(rat_str(e));
    j["births_deaths"] = track.events;
    j["counts_constant"] = track.counts_constant;
    Json tr = Json::array();
    for (const auto& t : track.tracks) {
        Json pts = Json::array();
        for (const Point& p : t) pts.push_back({rat_str(p.x), rat_str(p.y)});
        tr.push_back(pts);
    }
    j["tracks"] = tr;
    return j.dump(2) + "\n";
}

std::string bigon_dump(const Arrangement& arr, const Bigon& b) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    auto corner = [](const Corner& c) {
        Json k;
        k["at"] = {rat_str(c.at.x), rat_str(c.at.y)};
        k["switching"] = c.switching;
        k["convex"] = c.convex;
        k["lift_arc1"] = {c.lift_arc1.seg, rat_str(c.lift_arc1.t)};
        k["lift_arc2"] = {c.lift_arc2.seg, rat_str(c.lift_arc2.t)};
        return k;
    };
    j["corner_in"] = corner(b.corner_in);
    j["corner_out"] = corner(b.corner_out);
    auto poly = [](const std::vector<Point>& pts) {
        Json a = Json::array();
        for (const Point& p : pts) a.push_back({rat_str(p.x), rat_str(p.y)});
        return a;
    };
    j["arc_bottom"] = poly(b.arc_bottom);
    j["arc_top"] = poly(b.arc_top);
    Json w = Json::array();
    for (int f = 0; f < arr.n_faces; ++f) w.push_back(b.winding[f]);
    j["winding"] = w;
    if (b.has_mark) j["mark"] = {b.mark.seg, rat_str(b.mark.t)};
    return j.dump(2) + "\n";
}

std::string oracle_diff_report_json(const std::vector<OracleDiff>& diffs, bool all_match) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["all_match"] = all_match;
    Json d = Json::array();
    for (const auto& x : diffs) {
        Json e;
        e["query"] = x.query;
        e["engine"] = x.engine_count;
        e["oracle"] = x.oracle_count;
        e["inconclusive"] = x.inconclusive;
        d.push_back(e);
    }
    j["diffs"] = d;
    return j.dump(2) + "\n";
}

}  // namespace floercx
