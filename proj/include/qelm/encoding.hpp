#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qelm/fields.hpp"
#include "qelm/idx.hpp"

namespace qelm {

/// How raw images become per-photon input amplitudes: the image is box-averaged
/// down to target_side^2 pixels, each pixel v maps to phase phase_scale*v/255 on
/// one of the first target_side^2 modes, and the remaining modes stay at phase 0.
/// Every mode carries magnitude 1/sqrt(modes_d) (phase-only encoding).
struct EncodingSpec {
    int target_side = 8;
    double phase_scale = 3.14159265358979323846;
    int modes_d = 290;
};

/// Area-weighted box average with fractional bin edges; output values stay in
/// the input range and the global mean is preserved.
Eigen::MatrixXd downsample(const Eigen::MatrixXd& image, int side);

Eigen::MatrixXd image_to_matrix(const ImageSet& set, int index);

/// Phase encoding of a downsampled image (row-major flattening).
EncodedInput phase_encode(const Eigen::MatrixXd& image, const EncodingSpec& spec);

EncodedInput encode_image(const ImageSet& set, int index, const EncodingSpec& spec);

/// Unit-norm vector with all phases zero (an unmodulated input).
EncodedInput flat_input(int modes_d);

/// Balanced class filter: an equal number of samples per requested class
/// (up to max_per_class), labels remapped to 0..c-1 in the order given,
/// sample order shuffled deterministically per seed.
ImageSet filter_classes(const ImageSet& set, const std::vector<int>& classes, int max_per_class,
                        std::uint64_t seed);

/// Unit-norm phase-only probe vectors with i.i.d. phases uniform on [0, 2pi).
std::vector<EncodedInput> random_probe_inputs(int count, int d, std::uint64_t seed);

}  // namespace qelm
