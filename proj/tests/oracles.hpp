#pragma once

// Test-only reference implementations, kept independent of the library's
// computation paths so they can serve as oracles.

#include <Eigen/Dense>
#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "qelm/fields.hpp"

namespace qelm::testing {

/// O(n! * n) permanent by explicit permutation sum.
template <typename Scalar>
Scalar naive_permanent(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
    const int n = static_cast<int>(a.rows());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total{};
    do {
        Scalar prod = a(0, perm[0]);
        for (int i = 1; i < n; ++i) prod *= a(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Ordered-tuple statistic: for detector tuple (j_1..j_n), with M the n x n
/// matrix whose column k holds photon k's amplitude at detector j_k... more
/// precisely M(i, k) = E(k, j_i), the value is
///   alpha/n! * |naive_perm(M)|^2 + (1-alpha)/n! * naive_perm(|M|^2).
inline double ordered_tuple_value(const PhotonFields& fields, const std::vector<int>& tuple,
                                  double alpha) {
    const int n = static_cast<int>(fields.photons());
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) m(i, k) = fields.E(k, tuple[i]);
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    const double quantum = std::norm(naive_permanent<std::complex<double>>(m));
    const double classical = naive_permanent<double>(Eigen::MatrixXd(m.cwiseAbs2()));
    return alpha / fact * quantum + (1.0 - alpha) / fact * classical;
}

/// Sum of the ordered-tuple statistic over all m^n tuples, collisions included.
inline double ordered_tuple_total(const PhotonFields& fields, double alpha) {
    const int n = static_cast<int>(fields.photons());
    const int m = static_cast<int>(fields.detectors());
    std::vector<int> tuple(n, 0);
    double total = 0.0;
    while (true) {
        total += ordered_tuple_value(fields, tuple, alpha);
        int pos = n - 1;
        while (pos >= 0 && tuple[pos] == m - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return total;
}

}  // namespace qelm::testing
