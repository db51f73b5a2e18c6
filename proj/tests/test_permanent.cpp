#include <doctest.h>

#include <complex>
#include <random>

#include "oracles.hpp"
#include "qelm/permanent.hpp"

using qelm::permanent;
using Complex = std::complex<double>;

TEST_CASE("permanent of the identity is 1") {
    for (int n : {1, 2, 5, 8}) {
        Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
        CHECK(std::abs(permanent<Complex>(id) - Complex(1.0)) < 1e-14);
    }
}

TEST_CASE("permanent of the 3x3 all-ones matrix is 3! = 6") {
    Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(3, 3);
    CHECK(permanent<double>(ones) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("2x2 example against the permutation-sum oracle") {
    Eigen::MatrixXd a(2, 2);
    a << 1, 2, 3, 4;
    CHECK(qelm::testing::naive_permanent<double>(a) == doctest::Approx(10.0));
    CHECK(permanent<double>(a) == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("Ryser matches the naive oracle on random complex matrices") {
    std::mt19937_64 eng(12345);
    std::normal_distribution<double> normal;
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 60; ++rep) {
            Eigen::MatrixXcd a(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) a(i, j) = Complex(normal(eng), normal(eng));
            const Complex fast = permanent<Complex>(a);
            const Complex slow = qelm::testing::naive_permanent<Complex>(a);
            const double scale = std::max(1.0, std::abs(slow));
            CHECK(std::abs(fast - slow) / scale < 1e-10);
        }
    }
}

TEST_CASE("permanent rejects bad shapes") {
    Eigen::MatrixXd rect(2, 3);
    rect.setZero();
    CHECK_THROWS_AS(permanent<double>(rect), std::invalid_argument);

    Eigen::MatrixXd big = Eigen::MatrixXd::Identity(21, 21);
    CHECK_THROWS_AS(permanent<double>(big), std::length_error);
}
