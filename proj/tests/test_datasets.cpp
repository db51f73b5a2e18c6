#include <doctest.h>

#include <zlib.h>

#include <cstdio>
#include <fstream>

#include "qelm/encoding.hpp"
#include "qelm/idx.hpp"

using namespace qelm;

namespace {

std::vector<std::uint8_t> image_fixture() {
    // magic 0x803, dims (1, 2, 2), payload (0, 255, 128, 7)
    return {0x00, 0x00, 0x08, 0x03, 0x00, 0x00, 0x00, 0x01, 0x00, 0x00,
            0x00, 0x02, 0x00, 0x00, 0x00, 0x02, 0x00, 0xff, 0x80, 0x07};
}

ImageSet synthetic_set(int per_class, int classes, int side = 4) {
    ImageSet set;
    set.count = per_class * classes;
    set.height = set.width = side;
    for (int c = 0; c < classes; ++c)
        for (int i = 0; i < per_class; ++i) {
            for (int p = 0; p < side * side; ++p)
                set.pixels.push_back(static_cast<std::uint8_t>((c * 40 + i + p) % 256));
            set.labels.push_back(static_cast<std::uint8_t>(c));
        }
    return set;
}

}  // namespace

TEST_CASE("parse a crafted images file") {
    const auto set = parse_idx_images(image_fixture());
    CHECK(set.count == 1);
    CHECK(set.height == 2);
    CHECK(set.width == 2);
    CHECK(set.pixels == std::vector<std::uint8_t>{0, 255, 128, 7});
}

TEST_CASE("parse a crafted labels file") {
    const std::vector<std::uint8_t> bytes = {0x00, 0x00, 0x08, 0x01, 0x00, 0x00,
                                             0x00, 0x03, 0x00, 0x01, 0x01};
    CHECK(parse_idx_labels(bytes) == std::vector<std::uint8_t>{0, 1, 1});
}

TEST_CASE("truncated and over-long payloads are rejected") {
    auto bytes = image_fixture();
    bytes.pop_back();
    CHECK_THROWS_AS(parse_idx_images(bytes), std::runtime_error);
    bytes = image_fixture();
    bytes.push_back(0);
    CHECK_THROWS_AS(parse_idx_images(bytes), std::runtime_error);
}

TEST_CASE("wrong magic numbers are rejected in both directions") {
    auto bytes = image_fixture();
    CHECK_THROWS_AS(parse_idx_labels(bytes), std::runtime_error);
    bytes[3] = 0x01;
    CHECK_THROWS_AS(parse_idx_images(bytes), std::runtime_error);
}

TEST_CASE("serialization round-trips bit-exactly") {
    const auto bytes = image_fixture();
    CHECK(serialize_idx_images(parse_idx_images(bytes)) == bytes);

    const std::vector<std::uint8_t> labels = {3, 1, 4, 1, 5};
    CHECK(parse_idx_labels(serialize_idx_labels(labels)) == labels);
}

TEST_CASE("gzip-compressed files are read transparently") {
    const auto raw = image_fixture();

    std::vector<std::uint8_t> gz(128);
    z_stream strm{};
    REQUIRE(deflateInit2(&strm, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 16 + MAX_WBITS, 8,
                         Z_DEFAULT_STRATEGY) == Z_OK);
    strm.next_in = const_cast<Bytef*>(raw.data());
    strm.avail_in = static_cast<uInt>(raw.size());
    strm.next_out = gz.data();
    strm.avail_out = static_cast<uInt>(gz.size());
    REQUIRE(deflate(&strm, Z_FINISH) == Z_STREAM_END);
    gz.resize(gz.size() - strm.avail_out);
    deflateEnd(&strm);

    const std::string path = "test_idx_tmp.gz";
    std::ofstream(path, std::ios::binary).write(reinterpret_cast<const char*>(gz.data()),
                                                static_cast<std::streamsize>(gz.size()));
    CHECK(read_file_maybe_gzip(path) == raw);
    std::remove(path.c_str());
}

TEST_CASE("box downsampling preserves constants and the global mean") {
    Eigen::MatrixXd constant = Eigen::MatrixXd::Constant(28, 28, 77.0);
    CHECK((downsample(constant, 8).array() - 77.0).abs().maxCoeff() < 1e-12);

    Eigen::MatrixXd checker(2, 2);
    checker << 0, 255, 255, 0;
    CHECK(downsample(checker, 1)(0, 0) == doctest::Approx(127.5));

    Eigen::MatrixXd img(28, 28);
    for (int r = 0; r < 28; ++r)
        for (int c = 0; c < 28; ++c) img(r, c) = (r * 31 + c * 17) % 256;
    CHECK(downsample(img, 8).mean() == doctest::Approx(img.mean()).epsilon(1e-9));
}

TEST_CASE("box downsampling is linear") {
    Eigen::MatrixXd a(14, 14), b(14, 14);
    for (int r = 0; r < 14; ++r)
        for (int c = 0; c < 14; ++c) {
            a(r, c) = (r * 3 + c) % 100;
            b(r, c) = (r + 7 * c) % 50;
        }
    const Eigen::MatrixXd lhs = downsample(2.0 * a + 3.0 * b, 5);
    const Eigen::MatrixXd rhs = 2.0 * downsample(a, 5) + 3.0 * downsample(b, 5);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("phase encoding: flat, inverted, and unit-norm") {
    EncodingSpec spec;
    spec.target_side = 2;
    spec.modes_d = 6;
    const double amp = 1.0 / std::sqrt(6.0);

    const auto zeros = phase_encode(Eigen::MatrixXd::Zero(2, 2), spec);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(zeros(k) - std::complex<double>(amp, 0)) < 1e-12);

    const auto bright = phase_encode(Eigen::MatrixXd::Constant(2, 2, 255.0), spec);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(bright(k) + amp) < 1e-12);  // e^{i pi} = -1
    for (int k = 4; k < 6; ++k) CHECK(std::abs(bright(k) - amp) < 1e-12);

    Eigen::MatrixXd arbitrary(2, 2);
    arbitrary << 13, 200, 96, 255;
    const auto x = phase_encode(arbitrary, spec);
    CHECK(std::abs(x.norm() - 1.0) < 1e-12);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(std::abs(x(k)) - amp) < 1e-12);

    spec.modes_d = 3;  // capacity: 4 pixels > 3 modes
    CHECK_THROWS_AS(phase_encode(arbitrary, spec), std::invalid_argument);
}

TEST_CASE("class filtering balances, remaps, and shuffles deterministically") {
    const auto set = synthetic_set(50, 4);
    const auto picked = filter_classes(set, {3, 1}, 20, 99);
    CHECK(picked.count == 40);
    int ones = 0;
    for (auto l : picked.labels) {
        CHECK((l == 0 || l == 1));
        ones += l;
    }
    CHECK(ones == 20);

    const auto again = filter_classes(set, {3, 1}, 20, 99);
    CHECK(picked.pixels == again.pixels);
    CHECK(picked.labels == again.labels);

    // single class remaps to label 0
    const auto solo = filter_classes(set, {2}, 10, 1);
    CHECK(solo.count == 10);
    for (auto l : solo.labels) CHECK(l == 0);

    CHECK_THROWS_AS(filter_classes(set, {9}, 10, 1), std::runtime_error);
}

TEST_CASE("balanced subsampling is limited by the scarcest class") {
    auto set = synthetic_set(30, 2);
    // drop most of class 1
    ImageSet small;
    small.height = small.width = set.height;
    for (int i = 0; i < set.count; ++i) {
        if (set.labels[i] == 1 && i % 10 != 0) continue;
        const auto* px = set.image(i);
        small.pixels.insert(small.pixels.end(), px, px + 16);
        small.labels.push_back(set.labels[i]);
        ++small.count;
    }
    const auto picked = filter_classes(small, {0, 1}, 25, 5);
    CHECK(picked.count == 6);  // 3 of each
}

TEST_CASE("random probes: unit norm, equal magnitudes, determinism") {
    const auto probes = random_probe_inputs(70, 290, 12);
    REQUIRE(probes.size() == 70);
    for (const auto& x : probes) {
        CHECK(std::abs(x.norm() - 1.0) < 1e-12);
        CHECK(x.size() == 290);
    }
    const auto again = random_probe_inputs(70, 290, 12);
    CHECK(probes[0] == again[0]);
    CHECK(probes[69] == again[69]);

    const auto tiny = random_probe_inputs(1, 4, 3)[0];
    const double amp = 1.0 / 2.0;
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(std::abs(tiny(k)) - amp) < 1e-12);
        CHECK(std::arg(tiny(k)) == std::arg(tiny(k)));  // finite
    }
}
