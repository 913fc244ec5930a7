#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vinlab/harness/config.hpp"

namespace vinlab::harness {

/// Formats a double with full round-trip precision; the single formatting
/// point for every CSV/JSON cell, keeping reruns byte-identical.
std::string format_number(double v);

struct Report {
    std::string experiment;
    std::map<std::string, std::string> config_echo;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, std::string> summary;
    bool pass = true;
    double wall_seconds = 0.0;

    void add_row(const std::vector<std::string>& cells);
    void set_summary(const std::string& key, double value);
    void set_summary(const std::string& key, const std::string& value);
    long column_index(const std::string& name) const;  // -1 when absent

    std::string to_csv() const;
    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
};

/// Concatenates rows of reports with identical experiment id and columns and
/// recomputes the generic summary; refuses mixed ids or an empty list.
Report merge_reports(const std::vector<Report>& reports);

/// Generic summary: max over a "ratio" column, sums over "violations" and
/// "count" columns, when present.
void recompute_generic_summary(Report& rep);

void write_text_file(const std::string& path, const std::string& content);
Report load_report_json(const std::string& path);

}  // namespace vinlab::harness
