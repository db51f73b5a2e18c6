#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace qelm {

/// Spectrum summary of a feature matrix. rank_t is the smallest r such that
/// the leading r squared singular values carry at least fraction t of the
/// total squared spectrum.
struct RankReport {
    Eigen::VectorXd singular_values;  // non-increasing
    double threshold = 0.9;
    int rank_t = 0;
    double gaussian_baseline_rank = 0.0;  // 0 when no baseline was computed
    double normalized_rank = 0.0;         // rank_t * min(p,q) / baseline
};

/// Threshold rank of a non-zero matrix; t in (0, 1].
RankReport rank_at_threshold(const Eigen::MatrixXd& x, double t);

/// Mean threshold rank of `draws` i.i.d. standard-normal matrices of shape
/// p x q. This is the reference spectrum a featureless random map would have.
double gaussian_baseline_rank(Eigen::Index p, Eigen::Index q, double t, int draws,
                              std::uint64_t seed);

/// rank_at_threshold plus the Gaussian-baseline renormalization: a matrix as
/// rich as an i.i.d. Gaussian one maps to min(p, q).
RankReport gaussian_normalized_rank(const Eigen::MatrixXd& x, double t, int baseline_draws,
                                    std::uint64_t seed);

/// Least-squares slope/intercept of log(y) against log(x). All values must be
/// positive; needs at least 3 points.
struct LogLogFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LogLogFit fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace qelm
