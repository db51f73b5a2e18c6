#include <doctest.h>

#include <random>

#include "qelm/elm.hpp"

using namespace qelm;

namespace {

Dataset blobs(int per_class, double separation, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> normal;
    Dataset data;
    data.n_classes = 2;
    data.features.resize(2 * per_class, 3);
    data.labels.resize(2 * per_class);
    for (int i = 0; i < 2 * per_class; ++i) {
        const int y = i % 2;
        data.labels(i) = y;
        for (int j = 0; j < 3; ++j)
            data.features(i, j) = normal(eng) + (y == 0 ? 0.0 : separation);
    }
    return data;
}

}  // namespace

TEST_CASE("ridge separates two points") {
    Eigen::MatrixXd x(2, 1);
    x << 0.0, 1.0;
    Eigen::VectorXi y(2);
    y << 0, 1;
    const auto model = train_ridge(x, y, 2, 1e-8);
    const auto pred = predict(model, x);
    CHECK(pred(0) == 0);
    CHECK(pred(1) == 1);
}

TEST_CASE("constant features fall back to the majority class") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Ones(6, 2);
    Eigen::VectorXi y(6);
    y << 1, 1, 1, 1, 0, 0;
    const auto model = train_ridge(x, y, 2, 1.0);
    const auto pred = predict(model, x);
    for (int i = 0; i < 6; ++i) CHECK(pred(i) == 1);
}

TEST_CASE("training is bitwise deterministic") {
    const auto data = blobs(25, 1.0, 7);
    const auto a = train_ridge(data.features, data.labels, 2, 1e-6);
    const auto b = train_ridge(data.features, data.labels, 2, 1e-6);
    CHECK(a.weights == b.weights);
}

TEST_CASE("zero weights predict class 0 by the tie-break rule") {
    ReadoutModel model;
    model.weights = Eigen::MatrixXd::Zero(3, 4);
    model.feature_means = Eigen::VectorXd::Zero(2);
    model.feature_stds = Eigen::VectorXd::Ones(2);
    Eigen::MatrixXd x(2, 2);
    x << 1.0, -2.0, 0.5, 3.0;
    const auto pred = predict(model, x);
    CHECK(pred(0) == 0);
    CHECK(pred(1) == 0);
}

TEST_CASE("one-class training always answers that class") {
    Eigen::MatrixXd x(3, 2);
    x << 1, 2, 3, 4, 5, 6;
    Eigen::VectorXi y = Eigen::VectorXi::Zero(3);
    const auto model = train_ridge(x, y, 1, 1e-3);
    Eigen::MatrixXd probe(1, 2);
    probe << -10.0, 42.0;
    CHECK(predict(model, probe)(0) == 0);
}

TEST_CASE("standardization leaves unit-variance zero-mean training columns") {
    const auto data = blobs(40, 2.0, 11);
    const auto model = train_ridge(data.features, data.labels, 2, 1e-4);
    const Eigen::MatrixXd z =
        (data.features.rowwise() - model.feature_means.transpose()).array().rowwise() /
        model.feature_stds.transpose().array();
    CHECK(z.colwise().mean().cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::VectorXd var = z.cwiseAbs2().colwise().mean();
    CHECK((var.array() - 1.0).abs().maxCoeff() < 1e-10);
}

TEST_CASE("ridge solution satisfies the normal equations") {
    const auto data = blobs(30, 1.5, 3);
    const double lambda = 1e-2;
    const auto model = train_ridge(data.features, data.labels, 2, lambda);

    Eigen::MatrixXd z(data.features.rows(), data.features.cols() + 1);
    z.leftCols(3) = (data.features.rowwise() - model.feature_means.transpose())
                        .array()
                        .rowwise() /
                    model.feature_stds.transpose().array();
    z.col(3).setOnes();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(data.labels.size(), 2);
    for (Eigen::Index i = 0; i < data.labels.size(); ++i) t(i, data.labels(i)) = 1.0;

    Eigen::MatrixXd lhs = (z.transpose() * z) * model.weights + lambda * model.weights;
    const Eigen::MatrixXd rhs = z.transpose() * t;
    const double scale = rhs.cwiseAbs().maxCoeff();
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8 * scale);
}

TEST_CASE("primal and dual solutions agree in the wide regime") {
    std::mt19937_64 eng(5);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd x(8, 20);  // q > p forces the dual path
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 20; ++j) x(i, j) = normal(eng);
    Eigen::VectorXi y(8);
    y << 0, 1, 0, 1, 1, 0, 1, 0;
    const auto dual = train_ridge(x, y, 2, 1e-3);

    // primal route, computed here explicitly
    Eigen::MatrixXd z(8, 21);
    z.leftCols(20) =
        (x.rowwise() - dual.feature_means.transpose()).array().rowwise() /
        dual.feature_stds.transpose().array();
    z.col(20).setOnes();
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(8, 2);
    for (int i = 0; i < 8; ++i) t(i, y(i)) = 1.0;
    Eigen::MatrixXd g = z.transpose() * z;
    g.diagonal().array() += 1e-3;
    const Eigen::MatrixXd w = g.ldlt().solve(z.transpose() * t);
    CHECK((w - dual.weights).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("scaling a raw feature column does not change predictions") {
    auto data = blobs(30, 1.2, 13);
    const auto base = predict(train_ridge(data.features, data.labels, 2, 1e-4), data.features);
    Dataset scaled = data;
    scaled.features.col(1) *= 1000.0;
    const auto after =
        predict(train_ridge(scaled.features, scaled.labels, 2, 1e-4), scaled.features);
    CHECK(base == after);
}

TEST_CASE("training fit error is non-decreasing in lambda") {
    const auto data = blobs(25, 1.0, 17);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(data.labels.size(), 2);
    for (Eigen::Index i = 0; i < data.labels.size(); ++i) t(i, data.labels(i)) = 1.0;

    double previous = -1.0;
    for (double lambda : {1e-6, 1e-3, 1e-1, 1.0, 10.0, 1e3}) {
        const auto model = train_ridge(data.features, data.labels, 2, lambda);
        Eigen::MatrixXd z(data.features.rows(), 4);
        z.leftCols(3) =
            (data.features.rowwise() - model.feature_means.transpose()).array().rowwise() /
            model.feature_stds.transpose().array();
        z.col(3).setOnes();
        const double sse = (z * model.weights - t).squaredNorm();
        CHECK(sse >= previous - 1e-10);
        previous = sse;
    }
}

TEST_CASE("cross-validation on separable blobs is nearly perfect") {
    const auto data = blobs(60, 6.0, 23);
    const auto report = cross_validate(data, 5, {1e-6, 1e-4, 1e-2}, 2, 99);
    CHECK(report.accuracy_mean > 0.99);
    CHECK(report.per_fold.size() == 10);

    double mean = 0;
    for (double a : report.per_fold) mean += a;
    mean /= report.per_fold.size();
    CHECK(report.accuracy_mean == doctest::Approx(mean).epsilon(1e-12));
}

TEST_CASE("label shuffling drops accuracy to chance") {
    auto data = blobs(100, 5.0, 29);
    std::mt19937_64 eng(1);
    for (Eigen::Index i = data.labels.size() - 1; i > 0; --i) {
        std::uniform_int_distribution<Eigen::Index> pick(0, i);
        std::swap(data.labels(i), data.labels(pick(eng)));
    }
    const auto report = cross_validate(data, 5, {1e-4, 1e-2, 1.0}, 3, 7);
    CHECK(report.accuracy_mean > 0.5 - 0.08);
    CHECK(report.accuracy_mean < 0.5 + 0.08);
}

TEST_CASE("missing classes and malformed folds are rejected") {
    auto data = blobs(10, 1.0, 31);
    data.labels.setZero();  // class 1 vanished
    CHECK_THROWS_AS(cross_validate(data, 5, {1e-3}, 1, 1), std::invalid_argument);

    const auto ok = blobs(10, 1.0, 31);
    CHECK_THROWS_AS(cross_validate(ok, 2, {1e-3}, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(cross_validate(ok, 5, {}, 1, 1), std::invalid_argument);
}

TEST_CASE("lambda selection reports the modal choice") {
    const auto data = blobs(40, 3.0, 37);
    const auto report = cross_validate(data, 4, {1e-5, 1e-2}, 3, 55);
    int votes = 0;
    for (double l : report.chosen_lambdas)
        if (l == report.chosen_lambda) ++votes;
    for (double candidate : {1e-5, 1e-2}) {
        int v = 0;
        for (double l : report.chosen_lambdas)
            if (l == candidate) ++v;
        CHECK(votes >= v);
    }
}
