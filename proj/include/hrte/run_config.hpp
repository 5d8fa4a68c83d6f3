#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrte/diagnostics.hpp"
#include "hrte/initial_data.hpp"
#include "hrte/integrator.hpp"
#include "hrte/spacetime.hpp"

namespace hrte {

enum class RunMode { run, sweep_N, convergence, inequality_batch, scaling_check };

// Flat key = value document ('#' comments). Unknown keys are rejected; each
// mode has its own required keys. See docs in README for the key reference.
struct RunConfig {
    RunMode mode = RunMode::run;
    SimConfig sim;
    InitialDataParams data;
    std::string output_dir = "out";
    long checkpoint_every = 0; // samples between checkpoint files (0 = off)
    std::vector<StPair> pairs;
    std::size_t morawetz_budget = 0; // 0 = do not evaluate the functional
    std::uint64_t morawetz_seed = 0;

    // mode extras
    std::vector<double> N_list;         // sweep_N
    std::vector<double> dt_list;        // convergence
    long batch_runs = 0;                // inequality_batch
    BoundKind bound = BoundKind::l4_3d; // inequality_batch
    std::vector<double> amplitude_scale_list; // inequality_batch (optional)
    double lambda = 2.0;                // scaling_check

    // canonical serialization (sorted key=value lines) and its FNV-1a hash
    std::map<std::string, std::string> raw;
    std::string canonical_text() const;
    std::string config_hash() const;
};

RunConfig parse_run_config(const std::string& path);
RunConfig parse_run_config_text(const std::string& text);

std::vector<StPair> parse_st_pairs(const std::string& text);

} // namespace hrte
