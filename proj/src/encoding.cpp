#include "qelm/encoding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qelm/rng.hpp"

namespace qelm {

namespace {

// Row weights for a fractional box filter src -> dst; each row sums to 1.
Eigen::MatrixXd box_weights(int src, int dst) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dst, src);
    const double scale = static_cast<double>(src) / dst;
    for (int r = 0; r < dst; ++r) {
        const double lo = r * scale;
        const double hi = (r + 1) * scale;
        for (int i = static_cast<int>(std::floor(lo)); i < src && i < std::ceil(hi); ++i) {
            const double overlap = std::min(hi, double(i + 1)) - std::max(lo, double(i));
            if (overlap > 0) w(r, i) = overlap / scale;
        }
    }
    return w;
}

}  // namespace

Eigen::MatrixXd downsample(const Eigen::MatrixXd& image, int side) {
    if (side < 1) throw std::invalid_argument("downsample: side must be positive");
    if (side > image.rows() || side > image.cols())
        throw std::invalid_argument("downsample: target larger than the image");
    return box_weights(static_cast<int>(image.rows()), side) * image *
           box_weights(static_cast<int>(image.cols()), side).transpose();
}

Eigen::MatrixXd image_to_matrix(const ImageSet& set, int index) {
    if (index < 0 || index >= set.count) throw std::out_of_range("image index out of range");
    Eigen::MatrixXd img(set.height, set.width);
    const std::uint8_t* px = set.image(index);
    for (int r = 0; r < set.height; ++r)
        for (int c = 0; c < set.width; ++c) img(r, c) = px[r * set.width + c];
    return img;
}

EncodedInput phase_encode(const Eigen::MatrixXd& image, const EncodingSpec& spec) {
    const int side = static_cast<int>(image.rows());
    if (image.cols() != side) throw std::invalid_argument("phase_encode: image must be square");
    if (side * side > spec.modes_d)
        throw std::invalid_argument("phase_encode: side^2 exceeds the mode count");

    const double amp = 1.0 / std::sqrt(static_cast<double>(spec.modes_d));
    EncodedInput x = EncodedInput::Constant(spec.modes_d, std::complex<double>(amp, 0.0));
    for (int r = 0; r < side; ++r)
        for (int c = 0; c < side; ++c) {
            const double phase = spec.phase_scale * image(r, c) / 255.0;
            x(r * side + c) = std::polar(amp, phase);
        }
    return x;
}

EncodedInput encode_image(const ImageSet& set, int index, const EncodingSpec& spec) {
    return phase_encode(downsample(image_to_matrix(set, index), spec.target_side), spec);
}

EncodedInput flat_input(int modes_d) {
    const double amp = 1.0 / std::sqrt(static_cast<double>(modes_d));
    return EncodedInput::Constant(modes_d, std::complex<double>(amp, 0.0));
}

ImageSet filter_classes(const ImageSet& set, const std::vector<int>& classes, int max_per_class,
                        std::uint64_t seed) {
    if (classes.empty()) throw std::invalid_argument("filter_classes: empty class list");
    if (max_per_class < 1) throw std::invalid_argument("filter_classes: max_per_class must be >= 1");
    if (set.labels.size() != static_cast<std::size_t>(set.count))
        throw std::invalid_argument("filter_classes: image set has no labels");

    std::vector<std::vector<int>> by_class(classes.size());
    for (int i = 0; i < set.count; ++i) {
        for (std::size_t c = 0; c < classes.size(); ++c)
            if (set.labels[i] == classes[c]) by_class[c].push_back(i);
    }

    std::size_t take = static_cast<std::size_t>(max_per_class);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (by_class[c].empty())
            throw std::runtime_error("filter_classes: class " + std::to_string(classes[c]) +
                                     " missing from the data");
        take = std::min(take, by_class[c].size());
    }

    auto eng = rng::make_engine(seed);
    std::vector<std::pair<int, std::uint8_t>> chosen;  // source index, remapped label
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::shuffle(by_class[c].begin(), by_class[c].end(), eng);
        for (std::size_t i = 0; i < take; ++i)
            chosen.emplace_back(by_class[c][i], static_cast<std::uint8_t>(c));
    }
    std::shuffle(chosen.begin(), chosen.end(), eng);

    ImageSet out;
    out.count = static_cast<int>(chosen.size());
    out.height = set.height;
    out.width = set.width;
    const std::size_t stride = std::size_t(set.height) * set.width;
    out.pixels.reserve(chosen.size() * stride);
    out.labels.reserve(chosen.size());
    for (const auto& [src, label] : chosen) {
        const std::uint8_t* px = set.image(src);
        out.pixels.insert(out.pixels.end(), px, px + stride);
        out.labels.push_back(label);
    }
    return out;
}

std::vector<EncodedInput> random_probe_inputs(int count, int d, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("random_probe_inputs: count must be >= 1");
    if (d < 1) throw std::invalid_argument("random_probe_inputs: d must be >= 1");

    const double amp = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<EncodedInput> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto eng = rng::make_engine(rng::derive_seed(seed, rng::kStreamProbe, i));
        std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);
        EncodedInput x(d);
        for (int k = 0; k < d; ++k) x(k) = std::polar(amp, phase(eng));
        out.push_back(std::move(x));
    }
    return out;
}

}  // namespace qelm
