#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vinlab/harness/experiments.hpp"
#include "vinlab/harness/parallel.hpp"

namespace {

using vinlab::harness::Config;
using vinlab::harness::Report;

struct CommonOpts {
    std::string experiment;
    std::string config_path;
    std::string out_dir;
    std::string format = "json";
    long seed = -1;
    long trials = -1;
    int threads = 0;
};

std::string default_out_dir() {
    const char* env = std::getenv("VINLAB_OUT_DIR");
    return env ? env : ".";
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--experiment", o.experiment, "experiment id (default: all in this group)");
    cmd->add_option("--config", o.config_path, "key = value config file");
    cmd->add_option("--seed", o.seed, "override the config seed");
    cmd->add_option("--trials", o.trials, "override the config trial count");
    cmd->add_option("--threads", o.threads, "worker threads (default: hardware)");
    cmd->add_option("--out", o.out_dir, "output directory (default: $VINLAB_OUT_DIR or .)");
    cmd->add_option("--format", o.format, "json, csv or both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
}

int run_group(const std::string& group, const CommonOpts& o) {
    Config cfg;
    if (!o.config_path.empty()) cfg = Config::from_file(o.config_path);
    if (o.seed >= 0) cfg.set("seed", std::to_string(o.seed));
    if (o.trials >= 0) cfg.set("trials", std::to_string(o.trials));
    const int threads = o.threads > 0 ? o.threads : vinlab::harness::default_threads();
    const std::string out_dir = o.out_dir.empty() ? default_out_dir() : o.out_dir;

    std::vector<std::string> ids;
    if (!o.experiment.empty()) {
        ids.push_back(o.experiment);
    } else {
        for (const auto& def : vinlab::harness::experiment_registry()) {
            if (def.group == group) ids.push_back(def.id);
        }
    }

    bool all_pass = true;
    for (const auto& id : ids) {
        const auto& def = vinlab::harness::find_experiment(id);
        if (!o.experiment.empty() && def.group != group) {
            std::cerr << "note: experiment '" << id << "' belongs to group '" << def.group
                      << "'\n";
        }
        Report rep = vinlab::harness::run_experiment(id, cfg, threads);
        all_pass = all_pass && rep.pass;
        if (o.format == "json" || o.format == "both") {
            vinlab::harness::write_text_file(out_dir + "/" + id + ".json",
                                             rep.to_json().dump(2) + "\n");
        }
        if (o.format == "csv" || o.format == "both") {
            vinlab::harness::write_text_file(out_dir + "/" + id + ".csv", rep.to_csv());
        }
        std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << id << "  (" << rep.rows.size()
                  << " rows, " << rep.wall_seconds << " s)\n";
        for (const auto& [key, value] : rep.summary) {
            std::cout << "       " << key << " = " << value << "\n";
        }
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for sharp decoupling geometry on the twisted cubic"};
    app.require_subcommand(1);

    CommonOpts geo, part, inc, dec;
    auto* cmd_geo = app.add_subcommand("geometry", "frame / shear / box / volume experiments");
    add_common(cmd_geo, geo);
    auto* cmd_part = app.add_subcommand("partition", "small-plank partition experiments");
    add_common(cmd_part, part);
    auto* cmd_inc = app.add_subcommand("incidence", "tube / plate / plank incidence experiments");
    add_common(cmd_inc, inc);
    auto* cmd_dec = app.add_subcommand("decoupling", "exponential-sum and packet experiments");
    add_common(cmd_dec, dec);

    std::vector<std::string> merge_paths;
    std::string inspect_path, merge_out;
    auto* cmd_rep = app.add_subcommand("report", "merge or inspect saved reports");
    cmd_rep->add_option("--merge", merge_paths, "JSON report paths to merge");
    cmd_rep->add_option("--inspect", inspect_path, "JSON report to summarize");
    cmd_rep->add_option("--out", merge_out, "output basename for the merged report");

    auto* cmd_list = app.add_subcommand("list", "catalogue of registered experiments");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_list->parsed()) {
            for (const auto& def : vinlab::harness::experiment_registry()) {
                std::cout << def.group << "/" << def.id << "\n    " << def.statement << "\n";
            }
            return 0;
        }
        if (cmd_geo->parsed()) return run_group("geometry", geo);
        if (cmd_part->parsed()) return run_group("partition", part);
        if (cmd_inc->parsed()) return run_group("incidence", inc);
        if (cmd_dec->parsed()) return run_group("decoupling", dec);
        if (cmd_rep->parsed()) {
            if (!merge_paths.empty()) {
                if (merge_paths.size() < 1) {
                    std::cerr << "report --merge: need at least one path\n";
                    return 2;
                }
                std::vector<Report> reports;
                for (const auto& p : merge_paths) {
                    reports.push_back(vinlab::harness::load_report_json(p));
                }
                Report merged = vinlab::harness::merge_reports(reports);
                const std::string base = merge_out.empty() ? "merged" : merge_out;
                vinlab::harness::write_text_file(base + ".json", merged.to_json().dump(2) + "\n");
                vinlab::harness::write_text_file(base + ".csv", merged.to_csv());
                std::cout << "merged " << reports.size() << " reports -> " << base
                          << ".{json,csv}\n";
                return 0;
            }
            if (!inspect_path.empty()) {
                const Report rep = vinlab::harness::load_report_json(inspect_path);
                std::cout << rep.experiment << ": " << rep.rows.size() << " rows, "
                          << (rep.pass ? "pass" : "FAIL") << "\n";
                for (const auto& [key, value] : rep.summary) {
                    std::cout << "  " << key << " = " << value << "\n";
                }
                return rep.pass ? 0 : 1;
            }
            std::cerr << "report: nothing to do (use --merge or --inspect)\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
