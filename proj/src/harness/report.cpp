#include "vinlab/harness/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vinlab::harness {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Report::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns.size()) {
        throw std::logic_error("report row width does not match the column set");
    }
    rows.push_back(cells);
}

void Report::set_summary(const std::string& key, double value) {
    summary[key] = format_number(value);
}

void Report::set_summary(const std::string& key, const std::string& value) {
    summary[key] = value;
}

long Report::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return static_cast<long>(i);
    }
    return -1;
}

std::string Report::to_csv() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ',';
        out << columns[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["experiment"] = experiment;
    j["config"] = config_echo;
    j["columns"] = columns;
    j["rows"] = rows;
    j["summary"] = summary;
    j["pass"] = pass;
    j["wall_seconds"] = wall_seconds;
    return j;
}

Report Report::from_json(const nlohmann::json& j) {
    Report r;
    r.experiment = j.at("experiment").get<std::string>();
    r.config_echo = j.at("config").get<std::map<std::string, std::string>>();
    r.columns = j.at("columns").get<std::vector<std::string>>();
    r.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
    r.summary = j.at("summary").get<std::map<std::string, std::string>>();
    r.pass = j.at("pass").get<bool>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    return r;
}

void recompute_generic_summary(Report& rep) {
    const long ratio_col = rep.column_index("ratio");
    if (ratio_col >= 0) {
        double mx = 0.0;
        for (const auto& row : rep.rows) {
            mx = std::max(mx, std::stod(row[static_cast<std::size_t>(ratio_col)]));
        }
        rep.set_summary("max_ratio", mx);
    }
    for (const char* name : {"violations", "count"}) {
        const long col = rep.column_index(name);
        if (col >= 0) {
            double total = 0.0;
            for (const auto& row : rep.rows) {
                total += std::stod(row[static_cast<std::size_t>(col)]);
            }
            rep.set_summary(std::string("total_") + name, total);
        }
    }
    rep.set_summary("rows", static_cast<double>(rep.rows.size()));
}

Report merge_reports(const std::vector<Report>& reports) {
    if (reports.empty()) throw std::invalid_argument("merge_reports: nothing to merge");
    Report out = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const Report& r = reports[i];
        if (r.experiment != out.experiment) {
            throw std::invalid_argument("merge_reports: mixed experiment ids ('" +
                                        out.experiment + "' vs '" + r.experiment + "')");
        }
        if (r.columns != out.columns) {
            throw std::invalid_argument("merge_reports: column sets differ");
        }
        out.rows.insert(out.rows.end(), r.rows.begin(), r.rows.end());
        out.pass = out.pass && r.pass;
        out.wall_seconds += r.wall_seconds;
    }
    recompute_generic_summary(out);
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Report load_report_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    nlohmann::json j;
    in >> j;
    return Report::from_json(j);
}

}  // namespace vinlab::harness
