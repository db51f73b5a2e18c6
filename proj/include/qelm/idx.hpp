#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qelm {

/// 8-bit image stack with per-image class labels.
struct ImageSet {
    int count = 0;
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> pixels;  // count*height*width, row-major
    std::vector<std::uint8_t> labels;  // count (empty until paired with a label file)

    const std::uint8_t* image(int i) const { return pixels.data() + std::size_t(i) * height * width; }
};

// IDX container: u32 big-endian magic (0x803 images / 0x801 labels), then one
// u32 big-endian size per dimension, then the raw u8 payload.

/// Parses an images file (magic 0x00000803, dims count x height x width).
ImageSet parse_idx_images(const std::vector<std::uint8_t>& bytes);

/// Parses a labels file (magic 0x00000801, one dim).
std::vector<std::uint8_t> parse_idx_labels(const std::vector<std::uint8_t>& bytes);

/// Inverse of parse_idx_images / parse_idx_labels, bit-exact round trip.
std::vector<std::uint8_t> serialize_idx_images(const ImageSet& set);
std::vector<std::uint8_t> serialize_idx_labels(const std::vector<std::uint8_t>& labels);

/// Reads a file, transparently inflating gzip content (magic 0x1f 0x8b).
std::vector<std::uint8_t> read_file_maybe_gzip(const std::string& path);

/// Loads and pairs image + label files (either may be gzip-compressed).
ImageSet load_image_set(const std::string& images_path, const std::string& labels_path);

}  // namespace qelm
