#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arbfn {

/// Runner configuration; the CLI maps its flags straight onto this.
struct ExperimentConfig {
    std::uint64_t seed = 1;
    std::size_t replicates = 100000;
    std::vector<int> n_ladder;  // empty: each experiment uses its documented default
    int grid_mult = 64;         // fine-grid multiplier for oscillating integrals (>= 16)
    double gate = 4.0;          // |z| gate for statistical rows
    unsigned threads = 0;       // 0 = hardware default
};

/// One line of the CSV report. Statistical rows carry a z-score against
/// the target; deterministic rows carry a pass flag evaluated at an
/// explicit tolerance instead (std_error 0, z 0).
struct ResultRow {
    std::string experiment;
    long n = 0;
    std::string statistic;
    double estimate = 0.0;
    double std_error = 0.0;
    double target = 0.0;
    std::string provenance;  // paper | analytic-oracle | simulation-oracle
    double z_score = 0.0;
    bool gated = false;         // participates in the |z| <= gate exit check
    bool deterministic = false; // participates via the pass flag
    bool pass = true;
};

struct ExperimentInfo {
    std::string id;
    std::string group;    // graduation | rajchman | paths | chaos | sde
    std::string summary;  // one line, names the limit statement it checks
};

const std::vector<ExperimentInfo>& experiment_catalog();

/// One line per experiment: id, group, summary.
std::string list_experiments_text();

/// Runs a single experiment. Throws std::invalid_argument for unknown ids
/// or invalid configs (non-increasing ladder, grid_mult < 16, ...).
std::vector<ResultRow> run_experiment(const std::string& id, const ExperimentConfig& config);

/// Runs every experiment of a group ("all" for the full catalog).
std::vector<ResultRow> run_group(const std::string& group, const ExperimentConfig& config);

/// Fixed schema: experiment,n,statistic,estimate,std_error,target,provenance,z_score
std::string rows_to_csv(const std::vector<ResultRow>& rows);

/// True when every gated row has |z| <= gate and every deterministic row passes.
bool rows_pass(const std::vector<ResultRow>& rows, double gate);

}  // namespace arbfn
