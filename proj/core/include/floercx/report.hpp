#ifndef FLOERCX_REPORT_HPP
#define FLOERCX_REPORT_HPP

#include "floercx/identify.hpp"
#include "floercx/oracle.hpp"
#include "floercx/pushoff.hpp"

#include <string>

namespace floercx {

inline constexpr int kReportSchemaVersion = 1;

std::string complex_report_text(const ChainComplex& cx);
std::string complex_report_json(const ChainComplex& cx);
std::string complex_dot(const ChainComplex& cx);

std::string compare_report_text(const ChainComplex& pearly, const ChainComplex& ham,
                                const Identification& id, const IdentificationReport& rep);
std::string compare_report_json(const ChainComplex& pearly, const ChainComplex& ham,
                                const Identification& id, const IdentificationReport& rep);
// Side-by-side digraph pair with shared node labels.
std::string compare_dot(const ChainComplex& pearly, const ChainComplex& ham,
                        const IdentificationReport& rep);

std::string window_report_json(const std::string& name, const Rat& reach, const Rat& delta);
std::string continuation_report_json(const ContinuationTrack& track);

// Bigon dump: corner params, arc vertex lists, face winding table.
std::string bigon_dump(const Arrangement& arr, const Bigon& b);

struct OracleDiff {
    std::string query;
    long long engine_count = 0, oracle_count = 0;
    bool inconclusive = false;
};
std::string oracle_diff_report_json(const std::vector<OracleDiff>& diffs, bool all_match);

}  // namespace floercx

#endif
