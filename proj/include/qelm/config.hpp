#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qelm/transmission.hpp"

namespace qelm {

enum class ExperimentKind {
    Classify,
    RankVsDetectors,
    RankVsPhotons,
    AccuracyVsCounts,
    AlphaSweep,
    PhotonScalingAccuracy,
};

ExperimentKind experiment_from_string(const std::string& s);
std::string to_string(ExperimentKind kind);

enum class ProbeModulation { FirstPhoton, AllPhotons };

struct TaskConfig {
    std::string images;
    std::string labels;
    std::vector<int> classes;
    int max_per_class = 180;
    int target_side = 8;
    double phase_scale = 3.14159265358979323846;
};

struct OpticsConfig {
    int n_photons = 2;
    int modes_per_photon = 290;
    int detectors = 22;  // 0 in RankVsPhotons means "track 2*n_photons"
    TmKind tm_kind = TmKind::Gaussian;
    int n_tm_seeds = 10;
};

struct ModelConfig {
    std::vector<double> alphas = {0.0, 1.0};
    bool include_intensity = false;
};

struct NoiseConfig {
    bool noiseless = true;
    std::vector<std::int64_t> counts;  // events per sample when not noiseless
    int n_noise_seeds = 1;
};

struct CvConfig {
    int folds = 5;
    std::vector<double> lambda_grid = {1e-6, 1e-4, 1e-2, 1.0, 1e2};
    int n_permutations = 1;
};

struct RankConfig {
    double threshold = 0.9;
    int probe_count = 0;  // 0 = twice the feature dimension
    int baseline_draws = 10;
    ProbeModulation probe_modulation = ProbeModulation::FirstPhoton;
};

struct SweepConfig {
    std::vector<int> detectors;
    std::vector<int> photons;
    std::vector<std::int64_t> counts;
    std::vector<double> alphas;
    std::vector<int> detector_subset_sizes;  // empty = a single all-detector subset
    int max_subsets = 100;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Classify;
    TaskConfig task;
    OpticsConfig optics;
    ModelConfig model;
    NoiseConfig noise;
    CvConfig cv;
    RankConfig rank;
    SweepConfig sweep;
    std::uint64_t master_seed = 0;
    std::uint64_t feature_cap = 100000;
    int jobs = 0;  // 0 = unset (environment / hardware decides)
    std::string output = "results";
};

/// Parses a JSON configuration file. Unknown keys are rejected with their
/// full path; structural violations are collected and reported together.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_json(const std::string& text);

/// Semantic validation (dimension compatibility, per-experiment requirements,
/// the feature-dimension cap). Returns an empty list when the config is sound.
std::vector<std::string> validate_config(const ExperimentConfig& cfg);

/// Canonical JSON text for the config (used to echo it into result records).
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace qelm
