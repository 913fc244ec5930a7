#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vinlab/harness/config.hpp"
#include "vinlab/harness/report.hpp"

namespace vinlab::harness {

struct ExperimentDef {
    std::string id;
    std::string group;      // geometry | partition | incidence | decoupling
    std::string statement;  // the quantity or inequality the verifier exercises
    std::vector<FieldSpec> schema;
    std::function<Report(const Config&, int threads)> run;
};

const std::vector<ExperimentDef>& experiment_registry();
const ExperimentDef& find_experiment(const std::string& id);

/// Validates the config against the experiment schema, runs the verifier and
/// stamps the config echo and wall time.
Report run_experiment(const std::string& id, const Config& cfg, int threads);

}  // namespace vinlab::harness
