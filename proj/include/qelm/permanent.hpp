#pragma once

#include <Eigen/Dense>
#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>

namespace qelm {

inline constexpr int kPermanentMaxDim = 20;

/// Matrix permanent via Ryser's formula with Gray-code subset iteration,
/// O(2^n * n). Columns are accumulated into running row sums; each Gray
/// step touches exactly one column.
///
/// perm(A) = sum_{nonempty S of columns} (-1)^(n-|S|) prod_i sum_{j in S} a_ij
template <typename Scalar>
Scalar permanent(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a) {
    const auto n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("permanent: matrix must be square");
    if (n < 1) throw std::invalid_argument("permanent: empty matrix");
    if (n > kPermanentMaxDim) throw std::length_error("permanent: dimension above guard (20)");

    if (n == 1) return a(0, 0);

    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> rowsum =
        Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(n);
    Scalar total{};
    std::uint64_t prev_gray = 0;
    const std::uint64_t count = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < count; ++k) {
        const std::uint64_t gray = k ^ (k >> 1);
        const std::uint64_t changed = gray ^ prev_gray;
        const int j = std::countr_zero(changed);
        if (gray & changed)
            rowsum += a.col(j);
        else
            rowsum -= a.col(j);
        prev_gray = gray;

        Scalar prod = rowsum(0);
        for (Eigen::Index i = 1; i < n; ++i) prod *= rowsum(i);
        const int popcount = std::popcount(gray);
        if ((n - popcount) & 1)
            total -= prod;
        else
            total += prod;
    }
    return total;
}

}  // namespace qelm
