#include "qelm/config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qelm/combinatorics.hpp"

namespace qelm {

using nlohmann::json;

ExperimentKind experiment_from_string(const std::string& s) {
    if (s == "classify") return ExperimentKind::Classify;
    if (s == "rank_vs_detectors") return ExperimentKind::RankVsDetectors;
    if (s == "rank_vs_photons") return ExperimentKind::RankVsPhotons;
    if (s == "accuracy_vs_counts") return ExperimentKind::AccuracyVsCounts;
    if (s == "alpha_sweep") return ExperimentKind::AlphaSweep;
    if (s == "photon_scaling_accuracy") return ExperimentKind::PhotonScalingAccuracy;
    throw std::invalid_argument("unknown experiment: '" + s + "'");
}

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Classify: return "classify";
        case ExperimentKind::RankVsDetectors: return "rank_vs_detectors";
        case ExperimentKind::RankVsPhotons: return "rank_vs_photons";
        case ExperimentKind::AccuracyVsCounts: return "accuracy_vs_counts";
        case ExperimentKind::AlphaSweep: return "alpha_sweep";
        case ExperimentKind::PhotonScalingAccuracy: return "photon_scaling_accuracy";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::runtime_error("config: " + path + ": " + what);
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& known) {
    for (const auto& [key, _] : obj.items())
        if (!known.count(key)) fail(path.empty() ? key : path + "." + key, "unknown key");
}

template <typename T>
void read(const json& obj, const std::string& path, const char* key, T& out) {
    if (!obj.contains(key)) return;
    try {
        out = obj.at(key).get<T>();
    } catch (const json::exception& e) {
        fail(path + "." + key, e.what());
    }
}

void read_tm_kind(const json& obj, const std::string& path, TmKind& out) {
    if (!obj.contains("tm_kind")) return;
    try {
        out = tm_kind_from_string(obj.at("tm_kind").get<std::string>());
    } catch (const std::exception& e) {
        fail(path + ".tm_kind", e.what());
    }
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config: not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw std::runtime_error("config: top level must be an object");

    reject_unknown_keys(root, "",
                        {"experiment", "task", "optics", "model", "noise", "cv", "rank", "sweep",
                         "master_seed", "feature_cap", "jobs", "output"});

    ExperimentConfig cfg;
    if (!root.contains("experiment")) fail("experiment", "required key missing");
    try {
        cfg.experiment = experiment_from_string(root.at("experiment").get<std::string>());
    } catch (const std::exception& e) {
        fail("experiment", e.what());
    }

    if (root.contains("task")) {
        const json& t = root["task"];
        reject_unknown_keys(t, "task",
                            {"images", "labels", "classes", "max_per_class", "target_side",
                             "phase_scale"});
        read(t, "task", "images", cfg.task.images);
        read(t, "task", "labels", cfg.task.labels);
        read(t, "task", "classes", cfg.task.classes);
        read(t, "task", "max_per_class", cfg.task.max_per_class);
        read(t, "task", "target_side", cfg.task.target_side);
        read(t, "task", "phase_scale", cfg.task.phase_scale);
    }
    if (root.contains("optics")) {
        const json& o = root["optics"];
        reject_unknown_keys(o, "optics",
                            {"n_photons", "modes_per_photon", "detectors", "tm_kind",
                             "n_tm_seeds"});
        read(o, "optics", "n_photons", cfg.optics.n_photons);
        read(o, "optics", "modes_per_photon", cfg.optics.modes_per_photon);
        read(o, "optics", "detectors", cfg.optics.detectors);
        read_tm_kind(o, "optics", cfg.optics.tm_kind);
        read(o, "optics", "n_tm_seeds", cfg.optics.n_tm_seeds);
    }
    if (root.contains("model")) {
        const json& m = root["model"];
        reject_unknown_keys(m, "model", {"alphas", "include_intensity"});
        read(m, "model", "alphas", cfg.model.alphas);
        read(m, "model", "include_intensity", cfg.model.include_intensity);
    }
    if (root.contains("noise")) {
        const json& n = root["noise"];
        reject_unknown_keys(n, "noise", {"noiseless", "counts", "n_noise_seeds"});
        read(n, "noise", "noiseless", cfg.noise.noiseless);
        read(n, "noise", "counts", cfg.noise.counts);
        read(n, "noise", "n_noise_seeds", cfg.noise.n_noise_seeds);
        if (n.contains("counts") && !cfg.noise.counts.empty() && !n.contains("noiseless"))
            cfg.noise.noiseless = false;
    }
    if (root.contains("cv")) {
        const json& c = root["cv"];
        reject_unknown_keys(c, "cv", {"folds", "lambda_grid", "n_permutations"});
        read(c, "cv", "folds", cfg.cv.folds);
        read(c, "cv", "lambda_grid", cfg.cv.lambda_grid);
        read(c, "cv", "n_permutations", cfg.cv.n_permutations);
    }
    if (root.contains("rank")) {
        const json& r = root["rank"];
        reject_unknown_keys(r, "rank",
                            {"threshold", "probe_count", "baseline_draws", "probe_modulation"});
        read(r, "rank", "threshold", cfg.rank.threshold);
        read(r, "rank", "probe_count", cfg.rank.probe_count);
        read(r, "rank", "baseline_draws", cfg.rank.baseline_draws);
        if (r.contains("probe_modulation")) {
            const std::string s = r.at("probe_modulation").get<std::string>();
            if (s == "first")
                cfg.rank.probe_modulation = ProbeModulation::FirstPhoton;
            else if (s == "all")
                cfg.rank.probe_modulation = ProbeModulation::AllPhotons;
            else
                fail("rank.probe_modulation", "expected first|all, got '" + s + "'");
        }
    }
    if (root.contains("sweep")) {
        const json& s = root["sweep"];
        reject_unknown_keys(s, "sweep",
                            {"detectors", "photons", "counts", "alphas", "detector_subset_sizes",
                             "max_subsets"});
        read(s, "sweep", "detectors", cfg.sweep.detectors);
        read(s, "sweep", "photons", cfg.sweep.photons);
        read(s, "sweep", "counts", cfg.sweep.counts);
        read(s, "sweep", "alphas", cfg.sweep.alphas);
        read(s, "sweep", "detector_subset_sizes", cfg.sweep.detector_subset_sizes);
        read(s, "sweep", "max_subsets", cfg.sweep.max_subsets);
    }
    read(root, "", "master_seed", cfg.master_seed);
    read(root, "", "feature_cap", cfg.feature_cap);
    read(root, "", "jobs", cfg.jobs);
    read(root, "", "output", cfg.output);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("config: cannot open " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_config_json(buf.str());
}

namespace {

bool needs_task(ExperimentKind kind) {
    return kind == ExperimentKind::Classify || kind == ExperimentKind::AccuracyVsCounts ||
           kind == ExperimentKind::AlphaSweep || kind == ExperimentKind::PhotonScalingAccuracy;
}

}  // namespace

std::vector<std::string> validate_config(const ExperimentConfig& cfg) {
    std::vector<std::string> errors;
    auto err = [&](const std::string& m) { errors.push_back(m); };

    if (cfg.optics.n_photons < 1) err("optics.n_photons: must be >= 1");
    if (cfg.optics.modes_per_photon < 1) err("optics.modes_per_photon: must be >= 1");
    if (cfg.optics.n_tm_seeds < 1) err("optics.n_tm_seeds: must be >= 1");
    if (cfg.optics.detectors < 0) err("optics.detectors: must be >= 0");
    if (cfg.optics.detectors == 0 && cfg.experiment != ExperimentKind::RankVsPhotons)
        err("optics.detectors: must be >= 1 for this experiment");

    if (needs_task(cfg.experiment)) {
        if (cfg.task.images.empty()) err("task.images: required for this experiment");
        if (cfg.task.labels.empty()) err("task.labels: required for this experiment");
        if (cfg.task.classes.empty()) err("task.classes: required for this experiment");
        if (cfg.task.max_per_class < 1) err("task.max_per_class: must be >= 1");
        if (cfg.task.target_side < 1) err("task.target_side: must be >= 1");
        if (cfg.task.target_side * cfg.task.target_side > cfg.optics.modes_per_photon)
            err("task.target_side: side^2 exceeds optics.modes_per_photon");
        if (cfg.cv.folds < 3) err("cv.folds: must be >= 3");
        if (cfg.cv.lambda_grid.empty()) err("cv.lambda_grid: must not be empty");
        for (double l : cfg.cv.lambda_grid)
            if (!(l > 0)) err("cv.lambda_grid: entries must be positive");
        if (cfg.cv.n_permutations < 1) err("cv.n_permutations: must be >= 1");
    }

    for (double a : cfg.model.alphas)
        if (a < 0.0 || a > 1.0) err("model.alphas: entries must lie in [0, 1]");
    if (cfg.model.alphas.empty()) err("model.alphas: must not be empty");

    if (!cfg.noise.noiseless) {
        if (cfg.noise.counts.empty() && cfg.experiment != ExperimentKind::AccuracyVsCounts)
            err("noise.counts: required when noiseless is false");
        for (auto c : cfg.noise.counts)
            if (c < 0) err("noise.counts: entries must be >= 0");
        if (cfg.noise.n_noise_seeds < 1) err("noise.n_noise_seeds: must be >= 1");
    }

    if (!(cfg.rank.threshold > 0.0) || cfg.rank.threshold > 1.0)
        err("rank.threshold: must lie in (0, 1]");
    if (cfg.rank.baseline_draws < 1) err("rank.baseline_draws: must be >= 1");
    if (cfg.rank.probe_count < 0) err("rank.probe_count: must be >= 0");

    switch (cfg.experiment) {
        case ExperimentKind::RankVsDetectors:
            if (cfg.sweep.detectors.empty()) err("sweep.detectors: required for rank_vs_detectors");
            for (int m : cfg.sweep.detectors)
                if (m < cfg.optics.n_photons)
                    err("sweep.detectors: every entry must be >= n_photons");
            break;
        case ExperimentKind::RankVsPhotons:
        case ExperimentKind::PhotonScalingAccuracy:
            if (cfg.sweep.photons.empty()) err("sweep.photons: required for this experiment");
            for (int n : cfg.sweep.photons)
                if (n < 1) err("sweep.photons: entries must be >= 1");
            break;
        case ExperimentKind::AccuracyVsCounts:
            if (cfg.sweep.counts.empty()) err("sweep.counts: required for accuracy_vs_counts");
            break;
        case ExperimentKind::AlphaSweep:
            if (cfg.sweep.alphas.empty()) err("sweep.alphas: required for alpha_sweep");
            for (double a : cfg.sweep.alphas)
                if (a < 0.0 || a > 1.0) err("sweep.alphas: entries must lie in [0, 1]");
            break;
        case ExperimentKind::Classify:
            if (cfg.noise.counts.size() > 1)
                err("noise.counts: classify takes at most one count setting");
            for (int s : cfg.sweep.detector_subset_sizes)
                if (s < cfg.optics.n_photons || s > cfg.optics.detectors)
                    err("sweep.detector_subset_sizes: sizes must lie in [n_photons, detectors]");
            if (cfg.sweep.max_subsets < 1) err("sweep.max_subsets: must be >= 1");
            break;
    }

    // resource guard: the widest feature dimension the config can reach
    {
        int max_m = cfg.optics.detectors;
        int max_n = cfg.optics.n_photons;
        for (int m : cfg.sweep.detectors) max_m = std::max(max_m, m);
        if (cfg.experiment == ExperimentKind::RankVsPhotons ||
            cfg.experiment == ExperimentKind::PhotonScalingAccuracy) {
            for (int n : cfg.sweep.photons) {
                max_n = std::max(max_n, n);
                if (cfg.optics.detectors == 0) max_m = std::max(max_m, 2 * n);
            }
        }
        if (max_m > 0 && max_n > 0 && max_n <= max_m) {
            const auto dim = binomial_capped(max_m, max_n, cfg.feature_cap);
            if (dim > cfg.feature_cap)
                err("feature_cap: C(" + std::to_string(max_m) + ", " + std::to_string(max_n) +
                    ") exceeds the configured cap of " + std::to_string(cfg.feature_cap));
        }
    }

    return errors;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json root;
    root["experiment"] = to_string(cfg.experiment);
    root["task"] = {{"images", cfg.task.images},
                    {"labels", cfg.task.labels},
                    {"classes", cfg.task.classes},
                    {"max_per_class", cfg.task.max_per_class},
                    {"target_side", cfg.task.target_side},
                    {"phase_scale", cfg.task.phase_scale}};
    root["optics"] = {{"n_photons", cfg.optics.n_photons},
                      {"modes_per_photon", cfg.optics.modes_per_photon},
                      {"detectors", cfg.optics.detectors},
                      {"tm_kind", to_string(cfg.optics.tm_kind)},
                      {"n_tm_seeds", cfg.optics.n_tm_seeds}};
    root["model"] = {{"alphas", cfg.model.alphas},
                     {"include_intensity", cfg.model.include_intensity}};
    root["noise"] = {{"noiseless", cfg.noise.noiseless},
                     {"counts", cfg.noise.counts},
                     {"n_noise_seeds", cfg.noise.n_noise_seeds}};
    root["cv"] = {{"folds", cfg.cv.folds},
                  {"lambda_grid", cfg.cv.lambda_grid},
                  {"n_permutations", cfg.cv.n_permutations}};
    root["rank"] = {{"threshold", cfg.rank.threshold},
                    {"probe_count", cfg.rank.probe_count},
                    {"baseline_draws", cfg.rank.baseline_draws},
                    {"probe_modulation",
                     cfg.rank.probe_modulation == ProbeModulation::FirstPhoton ? "first" : "all"}};
    root["sweep"] = {{"detectors", cfg.sweep.detectors},
                     {"photons", cfg.sweep.photons},
                     {"counts", cfg.sweep.counts},
                     {"alphas", cfg.sweep.alphas},
                     {"detector_subset_sizes", cfg.sweep.detector_subset_sizes},
                     {"max_subsets", cfg.sweep.max_subsets}};
    root["master_seed"] = cfg.master_seed;
    root["feature_cap"] = cfg.feature_cap;
    root["jobs"] = cfg.jobs;
    root["output"] = cfg.output;
    return root.dump(2);
}

}  // namespace qelm
