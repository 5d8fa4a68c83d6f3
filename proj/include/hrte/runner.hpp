#pragma once

#include <optional>
#include <string>

#include "hrte/run_config.hpp"

namespace hrte {

struct CliOverrides {
    std::optional<std::string> output_dir;
    std::optional<std::uint64_t> seed;
    bool oracle = false; // force exhaustive Morawetz sums (small grids only)
};

// Exit codes shared by the CLI: 0 success, 2 config error, 3 integrator abort.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitBreakdown = 3;

// Execute a config file (any mode). Writes diagnostics.csv, summary.json and
// checkpoints under the output directory; on abort flushes partial output
// and drops a FAILED marker file.
int cli_run(const std::string& config_path, const CliOverrides& ov = {});

// Continue a checkpointed run for extra_T more time units, appending to the
// existing diagnostics stream (a '# resume ...' marker line separates the
// segments). config_path, when given, supplies non-state knobs (sample
// cadence, registered pairs); state and equation parameters come from the
// checkpoint header.
int cli_resume(const std::string& checkpoint_path, double extra_T,
               const std::optional<std::string>& config_path,
               const CliOverrides& ov = {});

// Parse-only check of a config file.
int cli_validate(const std::string& config_path);

// Worker cap for sweep modes: HRTE_THREADS (default 1).
int worker_threads();

} // namespace hrte
