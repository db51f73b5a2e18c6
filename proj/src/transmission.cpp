#include "qelm/transmission.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qelm/rng.hpp"

namespace qelm {

TmKind tm_kind_from_string(const std::string& s) {
    if (s == "haar") return TmKind::Haar;
    if (s == "gaussian") return TmKind::Gaussian;
    throw std::invalid_argument("unknown tm kind: '" + s + "' (expected haar|gaussian)");
}

std::string to_string(TmKind kind) {
    return kind == TmKind::Haar ? "haar" : "gaussian";
}

namespace {

Eigen::MatrixXcd ginibre(int rows, int cols, std::mt19937_64& eng, double scale) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = std::complex<double>(normal(eng), normal(eng)) * scale;
    return g;
}

}  // namespace

TransmissionMatrix sample_tm(TmKind kind, int m, int D, std::uint64_t seed) {
    if (m < 1 || D < 1) throw std::invalid_argument("sample_tm: dimensions must be positive");

    auto eng = rng::make_engine(seed);
    TransmissionMatrix tm;
    tm.kind = kind;
    tm.seed = seed;

    if (kind == TmKind::Gaussian) {
        tm.entries = ginibre(m, D, eng, 1.0 / std::sqrt(2.0 * m));
        return tm;
    }

    const int n = std::max(m, D);
    Eigen::MatrixXcd g = ginibre(n, n, eng, 1.0 / std::sqrt(2.0));
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    // Fix the gauge: multiply each column by the phase of the matching R
    // diagonal so the distribution is Haar rather than QR-convention biased.
    const Eigen::MatrixXcd& r = qr.matrixQR();
    for (int j = 0; j < n; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        if (mag > 0) q.col(j) *= d / mag;
    }
    tm.entries = q.topLeftCorner(m, D);
    return tm;
}

}  // namespace qelm
