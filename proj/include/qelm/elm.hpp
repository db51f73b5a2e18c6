#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace qelm {

/// Supervised task: p samples with q features each, integer labels 0..c-1.
struct Dataset {
    Eigen::MatrixXd features;  // p x q
    Eigen::VectorXi labels;    // p
    int n_classes = 0;
};

/// Throws if the dataset is malformed (non-finite features, missing classes,
/// fewer samples than classes).
void validate_dataset(const Dataset& data);

/// Linear readout: z-score standardization fitted on the training features,
/// then a ridge-regressed weight matrix over one-hot targets. The weight
/// matrix has q+1 rows (bias row last).
struct ReadoutModel {
    Eigen::MatrixXd weights;     // (q+1) x c
    Eigen::VectorXd feature_means;
    Eigen::VectorXd feature_stds;  // constant features get std 1
    double lambda = 0.0;
};

ReadoutModel train_ridge(const Eigen::MatrixXd& x, const Eigen::VectorXi& y, int n_classes,
                         double lambda);

/// Argmax class scores; ties break to the lowest class index.
Eigen::VectorXi predict(const ReadoutModel& model, const Eigen::MatrixXd& x);

double accuracy(const Eigen::VectorXi& predicted, const Eigen::VectorXi& truth);

struct EvalReport {
    double accuracy_mean = 0.0;
    double accuracy_std = 0.0;              // population std over per_fold
    std::vector<double> per_fold;           // permutation-major, then fold
    std::vector<double> chosen_lambdas;     // one per (permutation, fold)
    double chosen_lambda = 0.0;             // most frequent choice, ties -> smaller
};

/// Stratified k-fold protocol with a confirmation fold: each fold serves once
/// as the test set; the next fold (cyclically) is held out to select lambda
/// from the grid by confirmation accuracy (ties -> smaller lambda); the model
/// is then refit on train+confirmation and scored on the test fold. Repeated
/// for n_permutations reshuffles. Fold splits depend only on (labels, k, seed),
/// so runs over different feature sets pair up exactly.
EvalReport cross_validate(const Dataset& data, int k, const std::vector<double>& lambda_grid,
                          int n_permutations, std::uint64_t seed);

}  // namespace qelm
