#include "qelm/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "qelm/coincidence.hpp"
#include "qelm/combinatorics.hpp"
#include "qelm/detector.hpp"
#include "qelm/elm.hpp"
#include "qelm/encoding.hpp"
#include "qelm/expressivity.hpp"
#include "qelm/fields.hpp"
#include "qelm/rng.hpp"
#include "qelm/thread_pool.hpp"
#include "qelm/transmission.hpp"

extern "C" void openblas_set_num_threads(int);

namespace qelm {

namespace {

constexpr const char* kSeedRule = "splitmix64(splitmix64(master^tag)^index)";

std::string alpha_tag(double alpha) {
    std::string s = format_double(alpha);
    return s;
}

std::uint64_t tm_stream_seed(const ExperimentConfig& cfg, int tm_idx) {
    return rng::derive_seed(cfg.master_seed, rng::kStreamTm, tm_idx);
}

// ---- task data -------------------------------------------------------------

struct TaskData {
    std::vector<EncodedInput> inputs;
    Eigen::VectorXi labels;
    int n_classes = 0;
};

TaskData load_task(const ExperimentConfig& cfg) {
    const ImageSet raw = load_image_set(cfg.task.images, cfg.task.labels);
    const ImageSet picked = filter_classes(raw, cfg.task.classes, cfg.task.max_per_class,
                                           rng::derive_seed(cfg.master_seed, rng::kStreamShuffle,
                                                            0xda7a));
    EncodingSpec spec;
    spec.target_side = cfg.task.target_side;
    spec.phase_scale = cfg.task.phase_scale;
    spec.modes_d = cfg.optics.modes_per_photon;

    TaskData task;
    task.inputs.reserve(picked.count);
    task.labels.resize(picked.count);
    for (int i = 0; i < picked.count; ++i) {
        task.inputs.push_back(encode_image(picked, i, spec));
        task.labels(i) = picked.labels[i];
    }
    task.n_classes = static_cast<int>(cfg.task.classes.size());
    return task;
}

// ---- feature building ------------------------------------------------------

struct FeatureTables {
    Eigen::MatrixXd quantum;    // p x C(m,n)
    Eigen::MatrixXd classical;  // p x C(m,n)
    Eigen::MatrixXd intensity;  // p x m
    std::vector<std::vector<int>> outcomes;
};

Eigen::MatrixXd blend_alpha(const FeatureTables& t, double alpha) {
    return (t.classical + alpha * (t.quantum - t.classical)).cwiseMax(0.0);
}

// Same data pattern on every photon.
FeatureTables build_task_features(const TaskData& task, const TransmissionMatrix& tm,
                                  int n_photons) {
    const auto p = static_cast<Eigen::Index>(task.inputs.size());
    FeatureTables tables;
    std::vector<EncodedInput> per_photon(n_photons);
    for (Eigen::Index s = 0; s < p; ++s) {
        std::fill(per_photon.begin(), per_photon.end(), task.inputs[s]);
        const PhotonFields fields = propagate(tm, per_photon);
        CoincidenceTerms terms = coincidence_terms(fields, n_photons);
        if (s == 0) {
            tables.quantum.resize(p, terms.quantum.size());
            tables.classical.resize(p, terms.quantum.size());
            tables.intensity.resize(p, tm.detectors());
            tables.outcomes = std::move(terms.outcomes);
        }
        tables.quantum.row(s) = terms.quantum.transpose();
        tables.classical.row(s) = terms.classical.transpose();
        tables.intensity.row(s) = intensity_features(fields).values.transpose();
    }
    return tables;
}

// Probe pattern on the first photon (others flat) or on every photon.
FeatureTables build_probe_features(const TransmissionMatrix& tm, int n_photons, int d,
                                   int n_probes, std::uint64_t probe_seed,
                                   ProbeModulation modulation) {
    const auto probes = random_probe_inputs(n_probes, d, probe_seed);
    FeatureTables tables;
    std::vector<EncodedInput> per_photon(n_photons, flat_input(d));
    for (int s = 0; s < n_probes; ++s) {
        if (modulation == ProbeModulation::AllPhotons)
            std::fill(per_photon.begin(), per_photon.end(), probes[s]);
        else
            per_photon[0] = probes[s];
        const PhotonFields fields = propagate(tm, per_photon);
        CoincidenceTerms terms = coincidence_terms(fields, n_photons);
        if (s == 0) {
            tables.quantum.resize(n_probes, terms.quantum.size());
            tables.classical.resize(n_probes, terms.quantum.size());
            tables.outcomes = std::move(terms.outcomes);
        }
        tables.quantum.row(s) = terms.quantum.transpose();
        tables.classical.row(s) = terms.classical.transpose();
    }
    return tables;
}

// Multinomial counts per sample, scaled back to empirical frequencies.
Eigen::MatrixXd sampled_frequencies(const Eigen::MatrixXd& features,
                                    const std::vector<std::vector<int>>& outcomes,
                                    std::int64_t n_events, std::uint64_t seed) {
    Eigen::MatrixXd out(features.rows(), features.cols());
    FeatureVector row;
    row.outcomes = outcomes;
    for (Eigen::Index s = 0; s < features.rows(); ++s) {
        row.values = features.row(s).transpose();
        const CountVector counts =
            sample_counts(row, n_events, rng::splitmix64(seed ^ (0x5a5a + s)));
        for (Eigen::Index k = 0; k < out.cols(); ++k)
            out(s, k) = n_events > 0
                            ? static_cast<double>(counts.counts[k]) / static_cast<double>(n_events)
                            : 0.0;
    }
    return out;
}

double mean_of(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// ---- experiment implementations ---------------------------------------------

ResultRecord make_record(const ExperimentConfig& cfg) {
    ResultRecord record;
    record.experiment = to_string(cfg.experiment);
    record.config_json = config_to_json(cfg);
    record.version = QELM_VERSION;
    record.master_seed = cfg.master_seed;
    record.seed_rule = kSeedRule;
    return record;
}

void append_cv_rows(std::vector<MetricRow>& rows, const EvalReport& report,
                    const std::string& axis, double sweep_value, int tm_idx,
                    const std::string& alpha, bool with_folds) {
    rows.push_back({axis, sweep_value, tm_idx, alpha, -1, "accuracy_mean", report.accuracy_mean});
    rows.push_back({axis, sweep_value, tm_idx, alpha, -1, "accuracy_std", report.accuracy_std});
    rows.push_back({axis, sweep_value, tm_idx, alpha, -1, "chosen_lambda", report.chosen_lambda});
    if (with_folds)
        for (std::size_t f = 0; f < report.per_fold.size(); ++f)
            rows.push_back({axis, sweep_value, tm_idx, alpha, static_cast<long long>(f),
                            "fold_accuracy", report.per_fold[f]});
}

ResultRecord run_classify(const ExperimentConfig& cfg, int jobs) {
    const TaskData task = load_task(cfg);
    const int m = cfg.optics.detectors;
    const int n = cfg.optics.n_photons;
    const int d = cfg.optics.modes_per_photon;

    std::vector<int> sizes = cfg.sweep.detector_subset_sizes;
    if (sizes.empty()) sizes = {m};
    std::vector<std::vector<DetectorSubset>> subsets_by_size;
    for (int size : sizes) {
        if (size == m)
            subsets_by_size.push_back({DetectorSubset{combinations(m, m).front()}});
        else
            subsets_by_size.push_back(sample_subsets(
                m, size, cfg.sweep.max_subsets,
                rng::derive_seed(cfg.master_seed, rng::kStreamSubset, size)));
    }

    ResultRecord record = make_record(cfg);
    std::vector<std::vector<MetricRow>> slots(cfg.optics.n_tm_seeds);

    parallel_for_indexed(jobs, cfg.optics.n_tm_seeds, [&](int tm_idx) {
        auto& rows = slots[tm_idx];
        const auto tm = sample_tm(cfg.optics.tm_kind, m, n * d, tm_stream_seed(cfg, tm_idx));
        const FeatureTables tables = build_task_features(task, tm, n);

        const std::uint64_t cv_seed =
            rng::derive_seed(cfg.master_seed, rng::kStreamShuffle, 1 + tm_idx);

        for (std::size_t size_idx = 0; size_idx < sizes.size(); ++size_idx) {
            const auto& subsets = subsets_by_size[size_idx];
            const double size_value = sizes[size_idx];
            for (std::size_t sub_idx = 0; sub_idx < subsets.size(); ++sub_idx) {
                const auto& subset = subsets[sub_idx];
                const auto coin_cols = restricted_outcome_indices(tables.outcomes, subset);
                std::vector<std::vector<int>> singles;
                for (int j = 0; j < m; ++j) singles.push_back({j});
                const auto int_cols = restricted_outcome_indices(singles, subset);
                const bool full = sizes[size_idx] == m;
                const bool with_folds = full && subsets.size() == 1;

                auto select = [](const Eigen::MatrixXd& x, const std::vector<int>& cols) {
                    Eigen::MatrixXd out(x.rows(), static_cast<Eigen::Index>(cols.size()));
                    for (std::size_t c = 0; c < cols.size(); ++c) out.col(c) = x.col(cols[c]);
                    return out;
                };

                std::vector<std::pair<std::string, Eigen::MatrixXd>> models;
                for (double alpha : cfg.model.alphas)
                    models.emplace_back(alpha_tag(alpha),
                                        select(blend_alpha(tables, alpha), coin_cols));
                if (cfg.model.include_intensity)
                    models.emplace_back("intensity", select(tables.intensity, int_cols));

                std::vector<std::vector<int>> kept_outcomes;
                for (int c : coin_cols) kept_outcomes.push_back(tables.outcomes[c]);
                std::vector<std::vector<int>> kept_singles;
                for (int c : int_cols) kept_singles.push_back(singles[c]);

                const int reps = cfg.noise.noiseless ? 1 : cfg.noise.n_noise_seeds;
                for (int rep = 0; rep < reps; ++rep) {
                    EvalReport intensity_report;
                    std::vector<std::pair<std::string, EvalReport>> reports;
                    for (const auto& [tag, features] : models) {
                        Eigen::MatrixXd x = features;
                        if (!cfg.noise.noiseless) {
                            std::uint64_t s = rng::derive_seed(cfg.master_seed, rng::kStreamNoise,
                                                               tm_idx);
                            s = rng::derive_seed(s, rng::kStreamNoise, sub_idx * 1000 + rep);
                            s = rng::derive_seed(s, rng::kStreamNoise,
                                                 std::hash<std::string>{}(tag));
                            x = sampled_frequencies(features, tag == "intensity" ? kept_singles
                                                                                 : kept_outcomes,
                                                    cfg.noise.counts.at(0), s);
                        }
                        const EvalReport report = cross_validate(
                            {x, task.labels, task.n_classes}, cfg.cv.folds, cfg.cv.lambda_grid,
                            cfg.cv.n_permutations, cv_seed);
                        append_cv_rows(rows, report, "subset_size", size_value, tm_idx,
                                       tag, with_folds);
                        if (tag == "intensity")
                            intensity_report = report;
                        else
                            reports.emplace_back(tag, report);
                    }
                    if (cfg.model.include_intensity && with_folds) {
                        for (const auto& [tag, report] : reports) {
                            for (std::size_t f = 0; f < report.per_fold.size(); ++f)
                                rows.push_back({"subset_size", size_value, tm_idx, tag,
                                                static_cast<long long>(f),
                                                "paired_diff_vs_intensity",
                                                report.per_fold[f] - intensity_report.per_fold[f]});
                        }
                    }
                }
            }
        }
    });

    for (auto& slot : slots)
        record.rows.insert(record.rows.end(), slot.begin(), slot.end());
    return record;
}

ResultRecord run_noise_sweep(const ExperimentConfig& cfg, int jobs) {
    const TaskData task = load_task(cfg);
    const int m = cfg.optics.detectors;
    const int n = cfg.optics.n_photons;
    const int d = cfg.optics.modes_per_photon;

    const bool alpha_axis = cfg.experiment == ExperimentKind::AlphaSweep;
    const std::vector<double> alphas = alpha_axis ? cfg.sweep.alphas : cfg.model.alphas;
    std::vector<std::int64_t> count_grid =
        alpha_axis ? cfg.noise.counts : cfg.sweep.counts;

    ResultRecord record = make_record(cfg);
    std::vector<std::vector<MetricRow>> slots(cfg.optics.n_tm_seeds);

    parallel_for_indexed(jobs, cfg.optics.n_tm_seeds, [&](int tm_idx) {
        auto& rows = slots[tm_idx];
        const auto tm = sample_tm(cfg.optics.tm_kind, m, n * d, tm_stream_seed(cfg, tm_idx));
        const FeatureTables tables = build_task_features(task, tm, n);
        const std::uint64_t cv_seed =
            rng::derive_seed(cfg.master_seed, rng::kStreamShuffle, 1 + tm_idx);
        const std::string axis = alpha_axis ? "alpha" : "counts";

        for (std::size_t a_idx = 0; a_idx < alphas.size(); ++a_idx) {
            const double alpha = alphas[a_idx];
            const Eigen::MatrixXd features = blend_alpha(tables, alpha);
            const double alpha_sweep_value = alpha_axis ? alpha : 0.0;

            // noiseless reference (sweep_value 0 on the counts axis)
            {
                const EvalReport report = cross_validate(
                    {features, task.labels, task.n_classes}, cfg.cv.folds, cfg.cv.lambda_grid,
                    cfg.cv.n_permutations, cv_seed);
                rows.push_back({axis, alpha_axis ? alpha_sweep_value : 0.0, tm_idx,
                                alpha_tag(alpha), -1, "accuracy_mean_noiseless",
                                report.accuracy_mean});
            }

            for (std::size_t n_idx = 0; n_idx < count_grid.size(); ++n_idx) {
                const std::int64_t events = count_grid[n_idx];
                std::vector<double> rep_means;
                for (int rep = 0; rep < cfg.noise.n_noise_seeds; ++rep) {
                    std::uint64_t s = rng::derive_seed(cfg.master_seed, rng::kStreamNoise, tm_idx);
                    s = rng::derive_seed(s, rng::kStreamNoise, a_idx);
                    s = rng::derive_seed(s, rng::kStreamNoise, n_idx * 4096 + rep);
                    const Eigen::MatrixXd x =
                        sampled_frequencies(features, tables.outcomes, events, s);
                    const EvalReport report = cross_validate(
                        {x, task.labels, task.n_classes}, cfg.cv.folds, cfg.cv.lambda_grid,
                        cfg.cv.n_permutations, cv_seed);
                    rows.push_back({axis,
                                    alpha_axis ? alpha_sweep_value
                                               : static_cast<double>(events),
                                    tm_idx, alpha_tag(alpha), rep, "accuracy_mean",
                                    report.accuracy_mean});
                    rep_means.push_back(report.accuracy_mean);
                }
                rows.push_back({axis,
                                alpha_axis ? alpha_sweep_value : static_cast<double>(events),
                                tm_idx, alpha_tag(alpha), -1, "accuracy_mean_over_noise",
                                mean_of(rep_means)});
            }
        }
    });

    for (auto& slot : slots)
        record.rows.insert(record.rows.end(), slot.begin(), slot.end());

    // Rank degradation under finite counts, on the first TM only.
    if (!alpha_axis && cfg.rank.probe_count > 0) {
        const auto tm = sample_tm(cfg.optics.tm_kind, m, n * d, tm_stream_seed(cfg, 0));
        const FeatureTables probes = build_probe_features(
            tm, n, d, cfg.rank.probe_count,
            rng::derive_seed(cfg.master_seed, rng::kStreamProbe, 0),
            cfg.rank.probe_modulation);
        const Eigen::MatrixXd noiseless = blend_alpha(probes, 1.0);
        const double t = cfg.rank.threshold;
        const double baseline = gaussian_baseline_rank(
            noiseless.rows(), noiseless.cols(), t, cfg.rank.baseline_draws,
            rng::derive_seed(cfg.master_seed, rng::kStreamBaseline, 0));
        record.rows.push_back({"counts", 0.0, 0, "1", -1, "noiseless_rank",
                               static_cast<double>(rank_at_threshold(noiseless, t).rank_t)});
        record.rows.push_back({"counts", 0.0, -1, "", -1, "gaussian_baseline", baseline});
        for (std::size_t n_idx = 0; n_idx < count_grid.size(); ++n_idx) {
            for (int rep = 0; rep < cfg.noise.n_noise_seeds; ++rep) {
                std::uint64_t s = rng::derive_seed(cfg.master_seed, rng::kStreamNoise, 0xbead);
                s = rng::derive_seed(s, rng::kStreamNoise, n_idx * 4096 + rep);
                const Eigen::MatrixXd x =
                    sampled_frequencies(noiseless, probes.outcomes, count_grid[n_idx], s);
                record.rows.push_back({"counts", static_cast<double>(count_grid[n_idx]), 0, "1",
                                       rep, "noisy_rank",
                                       static_cast<double>(rank_at_threshold(x, t).rank_t)});
            }
        }
    }
    return record;
}

ResultRecord run_rank_scaling(const ExperimentConfig& cfg, int jobs) {
    const bool photon_axis = cfg.experiment == ExperimentKind::RankVsPhotons;
    const std::string axis = photon_axis ? "photons" : "detectors";
    const int d = cfg.optics.modes_per_photon;

    struct Point {
        int n = 0, m = 0, probes = 0;
        std::uint64_t q = 0;
    };
    std::vector<Point> points;
    if (photon_axis) {
        for (int n : cfg.sweep.photons) {
            const int m = cfg.optics.detectors > 0 ? cfg.optics.detectors : 2 * n;
            points.push_back({n, m, 0, 0});
        }
    } else {
        for (int m : cfg.sweep.detectors) points.push_back({cfg.optics.n_photons, m, 0, 0});
    }
    for (auto& pt : points) {
        pt.q = binomial(pt.m, pt.n);
        pt.probes = cfg.rank.probe_count > 0 ? cfg.rank.probe_count
                                             : static_cast<int>(2 * pt.q);
    }

    // baselines per sweep point, then per-seed ranks
    std::vector<double> baselines(points.size());
    parallel_for_indexed(jobs, static_cast<int>(points.size()), [&](int i) {
        baselines[i] = gaussian_baseline_rank(
            points[i].probes, static_cast<Eigen::Index>(points[i].q), cfg.rank.threshold,
            cfg.rank.baseline_draws, rng::derive_seed(cfg.master_seed, rng::kStreamBaseline, i));
    });

    ResultRecord record = make_record(cfg);
    const int n_jobs = static_cast<int>(points.size()) * cfg.optics.n_tm_seeds;
    std::vector<std::vector<MetricRow>> slots(n_jobs);

    parallel_for_indexed(jobs, n_jobs, [&](int job) {
        const int point_idx = job / cfg.optics.n_tm_seeds;
        const int tm_idx = job % cfg.optics.n_tm_seeds;
        const Point& pt = points[point_idx];
        auto& rows = slots[job];

        const auto tm =
            sample_tm(cfg.optics.tm_kind, pt.m, pt.n * d, tm_stream_seed(cfg, tm_idx));
        const std::uint64_t probe_seed = rng::derive_seed(
            rng::derive_seed(cfg.master_seed, rng::kStreamProbe, point_idx), rng::kStreamProbe,
            tm_idx);
        const FeatureTables tables =
            build_probe_features(tm, pt.n, d, pt.probes, probe_seed, cfg.rank.probe_modulation);
        const double sweep_value = photon_axis ? pt.n : pt.m;

        for (double alpha : cfg.model.alphas) {
            const Eigen::MatrixXd x = blend_alpha(tables, alpha);
            const RankReport report = rank_at_threshold(x, cfg.rank.threshold);
            const double normalized =
                report.rank_t * static_cast<double>(std::min(x.rows(), x.cols())) /
                baselines[point_idx];
            rows.push_back({axis, sweep_value, tm_idx, alpha_tag(alpha), -1, "rank_t",
                            static_cast<double>(report.rank_t)});
            rows.push_back({axis, sweep_value, tm_idx, alpha_tag(alpha), -1, "normalized_rank",
                            normalized});
        }
    });

    for (auto& slot : slots)
        record.rows.insert(record.rows.end(), slot.begin(), slot.end());

    // per-point aggregates and, with three or more points, log-log slopes
    for (double alpha : cfg.model.alphas) {
        std::vector<double> xs, means;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double sweep_value = photon_axis ? points[i].n : points[i].m;
            std::vector<double> vals;
            for (const auto& row : record.rows)
                if (row.metric == "normalized_rank" && row.alpha == alpha_tag(alpha) &&
                    row.sweep_value == sweep_value)
                    vals.push_back(row.value);
            const double mean = mean_of(vals);
            record.rows.push_back({axis, sweep_value, -1, alpha_tag(alpha), -1,
                                   "normalized_rank_mean", mean});
            xs.push_back(sweep_value);
            means.push_back(mean);
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            record.rows.push_back({axis, xs[i], -1, "", -1, "gaussian_baseline", baselines[i]});
        if (xs.size() >= 3 && !photon_axis) {
            const LogLogFit fit = fit_loglog_slope(xs, means);
            record.rows.push_back({axis, 0.0, -1, alpha_tag(alpha), -1, "loglog_slope",
                                   fit.slope});
        }
    }
    return record;
}

ResultRecord run_photon_scaling(const ExperimentConfig& cfg, int jobs) {
    const TaskData task = load_task(cfg);
    const int m = cfg.optics.detectors;
    const int d = cfg.optics.modes_per_photon;

    ResultRecord record = make_record(cfg);
    const int n_jobs = static_cast<int>(cfg.sweep.photons.size()) * cfg.optics.n_tm_seeds;
    std::vector<std::vector<MetricRow>> slots(n_jobs);

    parallel_for_indexed(jobs, n_jobs, [&](int job) {
        const int n_idx = job / cfg.optics.n_tm_seeds;
        const int tm_idx = job % cfg.optics.n_tm_seeds;
        const int n = cfg.sweep.photons[n_idx];
        auto& rows = slots[job];

        const auto tm = sample_tm(cfg.optics.tm_kind, m, n * d, tm_stream_seed(cfg, tm_idx));
        const FeatureTables tables = build_task_features(task, tm, n);
        const std::uint64_t cv_seed =
            rng::derive_seed(cfg.master_seed, rng::kStreamShuffle, 1 + tm_idx);

        for (double alpha : cfg.model.alphas) {
            const EvalReport report = cross_validate(
                {blend_alpha(tables, alpha), task.labels, task.n_classes}, cfg.cv.folds,
                cfg.cv.lambda_grid, cfg.cv.n_permutations, cv_seed);
            append_cv_rows(rows, report, "photons", n, tm_idx, alpha_tag(alpha), false);
        }
    });

    for (auto& slot : slots)
        record.rows.insert(record.rows.end(), slot.begin(), slot.end());

    // seed-wise aggregates per photon count
    for (double alpha : cfg.model.alphas) {
        for (int n : cfg.sweep.photons) {
            std::vector<double> vals;
            for (const auto& row : record.rows)
                if (row.metric == "accuracy_mean" && row.alpha == alpha_tag(alpha) &&
                    row.sweep_value == n)
                    vals.push_back(row.value);
            record.rows.push_back({"photons", static_cast<double>(n), -1, alpha_tag(alpha), -1,
                                   "accuracy_mean_over_seeds", mean_of(vals)});
        }
    }
    return record;
}

}  // namespace

int resolve_jobs(const ExperimentConfig& cfg, int flag_jobs) {
    if (flag_jobs > 0) return flag_jobs;
    if (cfg.jobs > 0) return cfg.jobs;
    if (const char* env = std::getenv("QELM_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

ResultRecord run_experiment(const ExperimentConfig& cfg, int jobs) {
    const auto errors = validate_config(cfg);
    if (!errors.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw std::invalid_argument(msg);
    }
    // keep BLAS single-threaded: jobs are the parallelism unit, and results
    // must not depend on the worker count
    openblas_set_num_threads(1);

    const auto start = std::chrono::steady_clock::now();
    ResultRecord record;
    switch (cfg.experiment) {
        case ExperimentKind::Classify: record = run_classify(cfg, jobs); break;
        case ExperimentKind::AccuracyVsCounts:
        case ExperimentKind::AlphaSweep: record = run_noise_sweep(cfg, jobs); break;
        case ExperimentKind::RankVsDetectors:
        case ExperimentKind::RankVsPhotons: record = run_rank_scaling(cfg, jobs); break;
        case ExperimentKind::PhotonScalingAccuracy: record = run_photon_scaling(cfg, jobs); break;
    }
    record.wall_clock_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return record;
}

}  // namespace qelm
