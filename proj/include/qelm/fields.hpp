#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qelm/transmission.hpp"

namespace qelm {

/// Per-photon input amplitudes, unit Euclidean norm.
using EncodedInput = Eigen::VectorXcd;

/// Output fields: row i holds photon i's amplitude at each detector.
struct PhotonFields {
    Eigen::MatrixXcd E;  // n_photons x m

    Eigen::Index photons() const { return E.rows(); }
    Eigen::Index detectors() const { return E.cols(); }
};

/// Propagates n encoded inputs through the transmission matrix. Photon i
/// occupies the column block [i*d, (i+1)*d), so the TM must have n*d columns.
/// Each input must have unit norm (to 1e-9).
PhotonFields propagate(const TransmissionMatrix& tm, const std::vector<EncodedInput>& inputs);

}  // namespace qelm
