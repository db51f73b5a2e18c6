#include <doctest.h>

#include "qelm/transmission.hpp"

using qelm::sample_tm;
using qelm::TmKind;

TEST_CASE("square Haar draw is unitary") {
    const auto tm = sample_tm(TmKind::Haar, 4, 4, 7);
    const Eigen::MatrixXcd gram = tm.entries * tm.entries.adjoint();
    CHECK((gram - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("rectangular Haar rows come from a larger unitary") {
    const auto tm = sample_tm(TmKind::Haar, 3, 8, 11);
    CHECK(tm.entries.rows() == 3);
    CHECK(tm.entries.cols() == 8);
    for (int i = 0; i < 3; ++i) CHECK(tm.entries.row(i).norm() <= 1.0 + 1e-12);
}

TEST_CASE("Gaussian entries have variance close to 1/m") {
    const int m = 1000;
    const auto tm = sample_tm(TmKind::Gaussian, m, 1000, 1);
    const double var = tm.entries.cwiseAbs2().mean();
    CHECK(var == doctest::Approx(1.0 / m).epsilon(0.05));
}

TEST_CASE("identical seeds give bit-identical matrices") {
    const auto a = sample_tm(TmKind::Haar, 2, 2, 42);
    const auto b = sample_tm(TmKind::Haar, 2, 2, 42);
    CHECK(a.entries == b.entries);

    const auto c = sample_tm(TmKind::Gaussian, 5, 7, 9);
    const auto d = sample_tm(TmKind::Gaussian, 5, 7, 9);
    CHECK(c.entries == d.entries);
    CHECK(c.entries != sample_tm(TmKind::Gaussian, 5, 7, 10).entries);
}

TEST_CASE("zero dimensions are rejected") {
    CHECK_THROWS_AS(sample_tm(TmKind::Haar, 0, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample_tm(TmKind::Gaussian, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("kind names round-trip") {
    CHECK(qelm::tm_kind_from_string("haar") == TmKind::Haar);
    CHECK(qelm::tm_kind_from_string("gaussian") == TmKind::Gaussian);
    CHECK(qelm::to_string(TmKind::Gaussian) == "gaussian");
    CHECK_THROWS_AS(qelm::tm_kind_from_string("fourier"), std::invalid_argument);
}
