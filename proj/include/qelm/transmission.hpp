#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

namespace qelm {

enum class TmKind { Haar, Gaussian };

TmKind tm_kind_from_string(const std::string& s);
std::string to_string(TmKind kind);

/// Complex m x D map from input modes to output detectors.
struct TransmissionMatrix {
    Eigen::MatrixXcd entries;
    TmKind kind = TmKind::Gaussian;
    std::uint64_t seed = 0;

    Eigen::Index detectors() const { return entries.rows(); }
    Eigen::Index input_modes() const { return entries.cols(); }
};

/// Draws a transmission matrix.
///
/// Haar: rows of a Haar-random unitary of dimension max(m, D), truncated to
/// m x D (exactly unitary when m == D). Sampled by QR of a complex Ginibre
/// matrix with the R diagonal phases folded into Q.
/// Gaussian: i.i.d. circularly symmetric complex normal entries with
/// variance 1/m.
///
/// Deterministic: identical (kind, seed, m, D) give bit-identical entries.
TransmissionMatrix sample_tm(TmKind kind, int m, int D, std::uint64_t seed);

}  // namespace qelm
