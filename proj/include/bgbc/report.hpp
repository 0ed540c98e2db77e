#pragma once

#include <fstream>
#include <json.hpp>
#include <string>

#include "bgbc/invariants.hpp"

namespace bgbc {

inline constexpr const char* kToolName = "bgbc";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

inline const char* series_name(SeriesKind s) {
    switch (s) {
        case SeriesKind::general: return "general";
        case SeriesKind::special: return "sl";
        case SeriesKind::hamiltonian: return "sp";
    }
    return "?";
}

/// One verification step inside a report.
struct CheckResult {
    std::string name;
    bool pass = false;
    Json details = Json::object();
    double wall_ms = 0.0;
};

inline Json to_json(const InvariantEntry& e) {
    return Json{{"weight", e.weight},
                {"fermion", e.fermion},
                {"domain_dim", e.domain_dim},
                {"kernel_dim", e.kernel_dim},
                {"kernel_dim_prev_degree", e.kernel_dim_prev_degree},
                {"span_dim", e.span_dim},
                {"match", e.match},
                {"stable", e.stable},
                {"span_in_kernel", e.span_in_kernel},
                {"wplus_reduction_ok", e.wplus_reduction_ok}};
}

inline Json to_json(const InvariantReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    return Json{{"dim", r.dim_v},
                {"series", series_name(r.series)},
                {"max_weight", r.max_weight},
                {"degree_bound", r.degree_bound},
                {"all_match", r.all_match},
                {"all_stable", r.all_stable},
                {"all_span_in_kernel", r.all_span_in_kernel},
                {"all_wplus_reduction_ok", r.all_wplus_ok},
                {"entries", entries}};
}

inline Json to_json(const GroupInvariantReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"weight", e.weight},
                               {"fermion", e.fermion},
                               {"domain_dim", e.domain_dim},
                               {"fixed_dim", e.fixed_dim},
                               {"projector_rank", e.projector_rank},
                               {"agree", e.agree}});
    return Json{{"dim", r.dim_v},
                {"max_weight", r.max_weight},
                {"gamma_degree_bound", r.gamma_bound},
                {"group_order", r.group_order},
                {"all_agree", r.all_agree},
                {"entries", entries}};
}

/// Assembles a full report. Everything under "body" is a pure function
/// of the configuration, so re-running a command reproduces it byte for
/// byte; wall-clock data lives under "timing" only.
inline Json make_report(const std::string& command, const Json& config,
                        const std::vector<CheckResult>& checks, const Json& tables,
                        double total_wall_ms) {
    Json body;
    body["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    body["command"] = command;
    body["config"] = config;
    bool all = true;
    Json jchecks = Json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        jchecks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    }
    body["checks"] = jchecks;
    body["tables"] = tables;
    body["pass"] = all;

    Json timing;
    timing["wall_ms"] = total_wall_ms;
    Json per_check = Json::array();
    for (const auto& c : checks)
        per_check.push_back(Json{{"name", c.name}, {"wall_ms", c.wall_ms}});
    timing["checks"] = per_check;

    return Json{{"body", body}, {"timing", timing}};
}

/// CSV serialization of the dimension tables only: one line per table row.
inline std::string report_csv(const Json& report) {
    std::ostringstream os;
    const Json& tables = report.at("body").at("tables");
    for (const auto& [tname, table] : tables.items()) {
        if (!table.is_array() || table.empty()) continue;
        os << "table,";
        bool first = true;
        for (const auto& [k, v] : table.front().items()) {
            if (!first) os << ',';
            first = false;
            os << k;
        }
        os << '\n';
        for (const auto& row : table) {
            os << tname;
            for (const auto& [k, v] : row.items()) os << ',' << v.dump();
            os << '\n';
        }
    }
    return os.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

}  // namespace bgbc
