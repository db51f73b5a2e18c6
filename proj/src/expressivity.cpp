#include "qelm/expressivity.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qelm/linalg.hpp"
#include "qelm/rng.hpp"

namespace qelm {

RankReport rank_at_threshold(const Eigen::MatrixXd& x, double t) {
    if (!(t > 0.0) || t > 1.0)
        throw std::invalid_argument("rank_at_threshold: t must lie in (0, 1]");
    if (x.size() == 0 || x.isZero(0.0))
        throw std::invalid_argument("rank_at_threshold: zero matrix has no spectrum");

    RankReport report;
    report.singular_values = linalg::singular_values(x);
    report.threshold = t;

    const Eigen::VectorXd energy = report.singular_values.cwiseAbs2();
    const double total = energy.sum();
    double cum = 0.0;
    int r = static_cast<int>(energy.size());
    for (Eigen::Index i = 0; i < energy.size(); ++i) {
        cum += energy(i);
        if (cum / total >= t - 1e-15) {
            r = static_cast<int>(i) + 1;
            break;
        }
    }
    report.rank_t = r;
    return report;
}

double gaussian_baseline_rank(Eigen::Index p, Eigen::Index q, double t, int draws,
                              std::uint64_t seed) {
    if (draws < 1) throw std::invalid_argument("gaussian_baseline_rank: draws must be >= 1");
    double sum = 0.0;
    for (int i = 0; i < draws; ++i) {
        auto eng = rng::make_engine(rng::derive_seed(seed, rng::kStreamBaseline, i));
        std::normal_distribution<double> normal(0.0, 1.0);
        Eigen::MatrixXd g(p, q);
        for (Eigen::Index c = 0; c < q; ++c)
            for (Eigen::Index r = 0; r < p; ++r) g(r, c) = normal(eng);
        sum += rank_at_threshold(g, t).rank_t;
    }
    return sum / draws;
}

RankReport gaussian_normalized_rank(const Eigen::MatrixXd& x, double t, int baseline_draws,
                                    std::uint64_t seed) {
    RankReport report = rank_at_threshold(x, t);
    report.gaussian_baseline_rank = gaussian_baseline_rank(x.rows(), x.cols(), t,
                                                           baseline_draws, seed);
    report.normalized_rank =
        report.rank_t * static_cast<double>(std::min(x.rows(), x.cols())) /
        report.gaussian_baseline_rank;
    return report;
}

LogLogFit fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("fit_loglog_slope: length mismatch");
    if (xs.size() < 3) throw std::invalid_argument("fit_loglog_slope: need at least 3 points");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || !(ys[i] > 0.0))
            throw std::domain_error("fit_loglog_slope: values must be positive");
        const double lx = std::log(xs[i]);
        const double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    LogLogFit fit;
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

}  // namespace qelm
