#include "qelm/elm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "qelm/linalg.hpp"
#include "qelm/rng.hpp"

namespace qelm {

void validate_dataset(const Dataset& data) {
    const auto p = data.features.rows();
    if (p != data.labels.size())
        throw std::invalid_argument("dataset: feature rows and label count differ");
    if (data.n_classes < 1) throw std::invalid_argument("dataset: need at least one class");
    if (p < data.n_classes)
        throw std::invalid_argument("dataset: fewer samples than classes");
    if (!data.features.allFinite())
        throw std::invalid_argument("dataset: non-finite feature values");
    std::vector<bool> present(data.n_classes, false);
    for (Eigen::Index i = 0; i < p; ++i) {
        const int y = data.labels(i);
        if (y < 0 || y >= data.n_classes)
            throw std::invalid_argument("dataset: label out of range");
        present[y] = true;
    }
    for (int c = 0; c < data.n_classes; ++c)
        if (!present[c])
            throw std::invalid_argument("dataset: class " + std::to_string(c) + " absent");
}

namespace {

struct Standardizer {
    Eigen::VectorXd means, stds;

    static Standardizer fit(const Eigen::MatrixXd& x) {
        Standardizer s;
        s.means = x.colwise().mean();
        Eigen::MatrixXd centered = x.rowwise() - s.means.transpose();
        s.stds = (centered.cwiseAbs2().colwise().mean()).cwiseSqrt();
        for (Eigen::Index j = 0; j < s.stds.size(); ++j)
            if (s.stds(j) < 1e-12) s.stds(j) = 1.0;
        return s;
    }

    // standardized features plus a trailing bias column of ones
    Eigen::MatrixXd apply_with_bias(const Eigen::MatrixXd& x) const {
        Eigen::MatrixXd z(x.rows(), x.cols() + 1);
        z.leftCols(x.cols()) =
            (x.rowwise() - means.transpose()).array().rowwise() / stds.transpose().array();
        z.col(x.cols()).setOnes();
        return z;
    }
};

Eigen::MatrixXd one_hot(const Eigen::VectorXi& y, int n_classes) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(y.size(), n_classes);
    for (Eigen::Index i = 0; i < y.size(); ++i) t(i, y(i)) = 1.0;
    return t;
}

/// Shares the Gram matrix across a lambda grid. Solves the primal normal
/// equations when features are the smaller side, otherwise the dual
/// W = Z^T (Z Z^T + lambda I)^{-1} T, which is the same minimizer.
class RidgeSweep {
public:
    RidgeSweep(Eigen::MatrixXd z, Eigen::MatrixXd t) : z_(std::move(z)), t_(std::move(t)) {
        primal_ = z_.cols() <= z_.rows();
        if (primal_) {
            gram_ = z_.transpose() * z_;
            zt_t_ = z_.transpose() * t_;
        } else {
            gram_ = z_ * z_.transpose();
        }
    }

    Eigen::MatrixXd solve(double lambda) const {
        Eigen::MatrixXd reg = gram_;
        reg.diagonal().array() += lambda;
        if (primal_) return linalg::solve_spd(std::move(reg), zt_t_);
        return z_.transpose() * linalg::solve_spd(std::move(reg), t_);
    }

private:
    Eigen::MatrixXd z_, t_, gram_, zt_t_;
    bool primal_ = true;
};

int argmax_lowest(const Eigen::RowVectorXd& scores) {
    int best = 0;
    for (int c = 1; c < scores.size(); ++c)
        if (scores(c) > scores(best)) best = c;
    return best;
}

}  // namespace

ReadoutModel train_ridge(const Eigen::MatrixXd& x, const Eigen::VectorXi& y, int n_classes,
                         double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("train_ridge: lambda must be positive");
    if (!x.allFinite()) throw std::invalid_argument("train_ridge: non-finite features");
    if (x.rows() != y.size()) throw std::invalid_argument("train_ridge: rows/labels mismatch");

    const Standardizer st = Standardizer::fit(x);
    RidgeSweep sweep(st.apply_with_bias(x), one_hot(y, n_classes));

    ReadoutModel model;
    model.weights = sweep.solve(lambda);
    model.feature_means = st.means;
    model.feature_stds = st.stds;
    model.lambda = lambda;
    return model;
}

Eigen::VectorXi predict(const ReadoutModel& model, const Eigen::MatrixXd& x) {
    if (x.cols() != model.feature_means.size())
        throw std::invalid_argument("predict: feature count differs from the trained model");
    Standardizer st{model.feature_means, model.feature_stds};
    const Eigen::MatrixXd scores = st.apply_with_bias(x) * model.weights;
    Eigen::VectorXi out(x.rows());
    for (Eigen::Index i = 0; i < x.rows(); ++i) out(i) = argmax_lowest(scores.row(i));
    return out;
}

double accuracy(const Eigen::VectorXi& predicted, const Eigen::VectorXi& truth) {
    if (predicted.size() != truth.size())
        throw std::invalid_argument("accuracy: length mismatch");
    if (predicted.size() == 0) return 0.0;
    return (predicted.array() == truth.array()).cast<double>().mean();
}

namespace {

std::vector<std::vector<int>> stratified_folds(const Eigen::VectorXi& y, int n_classes, int k,
                                               std::mt19937_64& eng) {
    std::vector<std::vector<int>> by_class(n_classes);
    for (Eigen::Index i = 0; i < y.size(); ++i) by_class[y(i)].push_back(static_cast<int>(i));

    std::vector<std::vector<int>> folds(k);
    for (auto& idx : by_class) {
        std::shuffle(idx.begin(), idx.end(), eng);
        for (std::size_t i = 0; i < idx.size(); ++i) folds[i % k].push_back(idx[i]);
    }
    for (auto& f : folds) std::sort(f.begin(), f.end());
    return folds;
}

Eigen::MatrixXd take_rows(const Eigen::MatrixXd& x, const std::vector<int>& rows) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), x.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = x.row(rows[i]);
    return out;
}

Eigen::VectorXi take_labels(const Eigen::VectorXi& y, const std::vector<int>& rows) {
    Eigen::VectorXi out(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) out(static_cast<Eigen::Index>(i)) = y(rows[i]);
    return out;
}

void require_all_classes(const Eigen::VectorXi& y, int n_classes, const char* where) {
    std::vector<bool> present(n_classes, false);
    for (Eigen::Index i = 0; i < y.size(); ++i) present[y(i)] = true;
    for (int c = 0; c < n_classes; ++c)
        if (!present[c])
            throw std::runtime_error(std::string("cross_validate: class ") + std::to_string(c) +
                                     " absent from the " + where + " split");
}

}  // namespace

EvalReport cross_validate(const Dataset& data, int k, const std::vector<double>& lambda_grid,
                          int n_permutations, std::uint64_t seed) {
    validate_dataset(data);
    if (k < 3) throw std::invalid_argument("cross_validate: need k >= 3");
    if (lambda_grid.empty()) throw std::invalid_argument("cross_validate: empty lambda grid");
    if (n_permutations < 1) throw std::invalid_argument("cross_validate: need n_permutations >= 1");

    std::vector<double> grid = lambda_grid;
    std::sort(grid.begin(), grid.end());

    EvalReport report;
    for (int perm = 0; perm < n_permutations; ++perm) {
        auto eng = rng::make_engine(rng::derive_seed(seed, rng::kStreamShuffle, perm));
        const auto folds = stratified_folds(data.labels, data.n_classes, k, eng);

        for (int f = 0; f < k; ++f) {
            const int conf = (f + 1) % k;
            std::vector<int> train_rows;
            for (int g = 0; g < k; ++g)
                if (g != f && g != conf)
                    train_rows.insert(train_rows.end(), folds[g].begin(), folds[g].end());
            std::sort(train_rows.begin(), train_rows.end());

            const Eigen::MatrixXd x_train = take_rows(data.features, train_rows);
            const Eigen::VectorXi y_train = take_labels(data.labels, train_rows);
            require_all_classes(y_train, data.n_classes, "training");

            const Eigen::MatrixXd x_conf = take_rows(data.features, folds[conf]);
            const Eigen::VectorXi y_conf = take_labels(data.labels, folds[conf]);

            const Standardizer st = Standardizer::fit(x_train);
            RidgeSweep sweep(st.apply_with_bias(x_train), one_hot(y_train, data.n_classes));
            double best_lambda = grid.front();
            double best_acc = -1.0;
            for (double lambda : grid) {
                ReadoutModel mdl;
                mdl.weights = sweep.solve(lambda);
                mdl.feature_means = st.means;
                mdl.feature_stds = st.stds;
                mdl.lambda = lambda;
                const double acc = accuracy(predict(mdl, x_conf), y_conf);
                if (acc > best_acc) {
                    best_acc = acc;
                    best_lambda = lambda;
                }
            }

            std::vector<int> fit_rows = train_rows;
            fit_rows.insert(fit_rows.end(), folds[conf].begin(), folds[conf].end());
            std::sort(fit_rows.begin(), fit_rows.end());
            const ReadoutModel mdl = train_ridge(take_rows(data.features, fit_rows),
                                                 take_labels(data.labels, fit_rows),
                                                 data.n_classes, best_lambda);
            const double test_acc = accuracy(
                predict(mdl, take_rows(data.features, folds[f])), take_labels(data.labels, folds[f]));
            report.per_fold.push_back(test_acc);
            report.chosen_lambdas.push_back(best_lambda);
        }
    }

    const auto n = static_cast<double>(report.per_fold.size());
    double mean = 0.0;
    for (double a : report.per_fold) mean += a;
    mean /= n;
    double var = 0.0;
    for (double a : report.per_fold) var += (a - mean) * (a - mean);
    report.accuracy_mean = mean;
    report.accuracy_std = std::sqrt(var / n);

    std::map<double, int> votes;
    for (double l : report.chosen_lambdas) ++votes[l];
    int best_votes = -1;
    for (const auto& [lambda, v] : votes)
        if (v > best_votes) {
            best_votes = v;
            report.chosen_lambda = lambda;
        }
    return report;
}

}  // namespace qelm
