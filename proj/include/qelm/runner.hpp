#pragma once

#include "qelm/config.hpp"
#include "qelm/results.hpp"

namespace qelm {

/// Executes the configured experiment on a bounded worker pool and returns
/// the result record. Throws on invalid configs (the messages carry the
/// offending config paths). Deterministic for a fixed (config, master_seed)
/// regardless of the worker count.
ResultRecord run_experiment(const ExperimentConfig& cfg, int jobs);

/// Job-count resolution: CLI flag > config > QELM_JOBS > hardware.
int resolve_jobs(const ExperimentConfig& cfg, int flag_jobs);

}  // namespace qelm
