#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hyperbanana/constructions.hpp"
#include "hyperbanana/graph.hpp"
#include "hyperbanana/maxwell.hpp"
#include "hyperbanana/rigidity.hpp"

namespace hb {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

using Json = nlohmann::json;  // keys are kept sorted, so dumps are byte-stable

inline Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [u, v] : edges) out.push_back(Json::array({u, v}));
    return out;
}

inline Json trials_to_json(const std::vector<RankTrial>& trials) {
    Json out = Json::array();
    for (const auto& t : trials) {
        Json entry;
        entry["embedding_seed"] = t.embedding_seed;
        entry["exact"] = t.exact;
        entry["prime"] = t.prime;
        entry["rank"] = t.rank;
        out.push_back(entry);
    }
    return out;
}

inline Json maxwell_to_json(const MaxwellReport& report) {
    Json out;
    out["d"] = report.d;
    out["condition1"] = {{"expected", report.condition1.expected},
                         {"actual", report.condition1.actual},
                         {"pass", report.condition1.pass}};
    Json c2;
    c2["ran"] = report.condition2.ran;
    if (report.condition2.ran) {
        c2["pass"] = report.condition2.pass;
        c2["subsets_checked"] = report.condition2.subsets_checked;
        if (!report.condition2.pass) {
            c2["witness"] = report.condition2.witness;
            c2["witness_edge_count"] = report.condition2.witness_edge_count;
        }
    }
    out["condition2"] = c2;
    out["pass"] = report.pass;
    return out;
}

inline Json verdict_to_json(const RigidityVerdict& verdict) {
    Json out;
    out["d"] = verdict.d;
    out["n"] = verdict.n;
    out["m"] = verdict.m;
    out["rank"] = verdict.rank;
    out["nullity"] = verdict.nullity;
    out["dof"] = verdict.dof;
    out["independent"] = verdict.independent;
    out["classification"] = to_string(verdict.classification);
    out["certified"] = verdict.certified;
    out["trials"] = trials_to_json(verdict.trials);
    return out;
}

struct FamilyInfo {
    std::string name;
    int d = 0;
    int b = 0;
};

/// Everything one `check` invocation produced; serialized with sorted keys
/// and fixed indentation so identical seeds give byte-identical reports.
struct AnalysisReport {
    int d = 0;
    long n = 0;
    long m = 0;
    std::optional<FamilyInfo> family;
    std::optional<MaxwellReport> maxwell;
    std::optional<RigidityVerdict> verdict;
    std::optional<std::vector<Edge>> implied;
    int trials = 0;
    std::uint64_t seed = 0;
    std::string rank_mode;
    int parallelism = 0;
};

inline Json report_to_json(const AnalysisReport& report) {
    Json out;
    out["schema"] = kReportSchema;
    out["version"] = std::string(kToolVersion);
    out["graph"] = {{"d", report.d}, {"n", report.n}, {"m", report.m}};
    if (report.family)
        out["family"] = {{"name", report.family->name}, {"d", report.family->d}, {"b", report.family->b}};
    if (report.maxwell) out["maxwell"] = maxwell_to_json(*report.maxwell);
    if (report.verdict) out["verdict"] = verdict_to_json(*report.verdict);
    if (report.implied) out["implied_edges"] = edges_to_json(*report.implied);
    out["settings"] = {{"trials", report.trials},
                       {"seed", report.seed},
                       {"rank_mode", report.rank_mode},
                       {"parallelism", report.parallelism}};
    return out;
}

inline std::string render_report(const AnalysisReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

}  // namespace hb
