#include "qelm/idx.hpp"

#include <zlib.h>

#include <fstream>
#include <stdexcept>

namespace qelm {

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803;
constexpr std::uint32_t kLabelsMagic = 0x00000801;

std::uint32_t read_u32_be(const std::vector<std::uint8_t>& bytes, std::size_t offset) {
    if (offset + 4 > bytes.size()) throw std::runtime_error("idx: truncated header");
    return (std::uint32_t(bytes[offset]) << 24) | (std::uint32_t(bytes[offset + 1]) << 16) |
           (std::uint32_t(bytes[offset + 2]) << 8) | std::uint32_t(bytes[offset + 3]);
}

void write_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void check_payload(const std::vector<std::uint8_t>& bytes, std::size_t header,
                   std::size_t expected) {
    if (bytes.size() < header + expected) throw std::runtime_error("idx: payload truncated");
    if (bytes.size() > header + expected) throw std::runtime_error("idx: payload longer than header declares");
}

}  // namespace

ImageSet parse_idx_images(const std::vector<std::uint8_t>& bytes) {
    if (read_u32_be(bytes, 0) != kImagesMagic)
        throw std::runtime_error("idx: bad magic for an images file (expected 0x00000803)");
    ImageSet set;
    set.count = static_cast<int>(read_u32_be(bytes, 4));
    set.height = static_cast<int>(read_u32_be(bytes, 8));
    set.width = static_cast<int>(read_u32_be(bytes, 12));
    const std::size_t expected =
        std::size_t(set.count) * std::size_t(set.height) * std::size_t(set.width);
    check_payload(bytes, 16, expected);
    set.pixels.assign(bytes.begin() + 16, bytes.end());
    return set;
}

std::vector<std::uint8_t> parse_idx_labels(const std::vector<std::uint8_t>& bytes) {
    if (read_u32_be(bytes, 0) != kLabelsMagic)
        throw std::runtime_error("idx: bad magic for a labels file (expected 0x00000801)");
    const std::size_t count = read_u32_be(bytes, 4);
    check_payload(bytes, 8, count);
    return {bytes.begin() + 8, bytes.end()};
}

std::vector<std::uint8_t> serialize_idx_images(const ImageSet& set) {
    std::vector<std::uint8_t> out;
    out.reserve(16 + set.pixels.size());
    write_u32_be(out, kImagesMagic);
    write_u32_be(out, static_cast<std::uint32_t>(set.count));
    write_u32_be(out, static_cast<std::uint32_t>(set.height));
    write_u32_be(out, static_cast<std::uint32_t>(set.width));
    out.insert(out.end(), set.pixels.begin(), set.pixels.end());
    return out;
}

std::vector<std::uint8_t> serialize_idx_labels(const std::vector<std::uint8_t>& labels) {
    std::vector<std::uint8_t> out;
    out.reserve(8 + labels.size());
    write_u32_be(out, kLabelsMagic);
    write_u32_be(out, static_cast<std::uint32_t>(labels.size()));
    out.insert(out.end(), labels.begin(), labels.end());
    return out;
}

namespace {

std::vector<std::uint8_t> gunzip(const std::vector<std::uint8_t>& in) {
    z_stream strm{};
    if (inflateInit2(&strm, 16 + MAX_WBITS) != Z_OK)
        throw std::runtime_error("gzip: inflateInit failed");

    std::vector<std::uint8_t> out;
    std::vector<std::uint8_t> buf(1 << 16);
    strm.next_in = const_cast<Bytef*>(in.data());
    strm.avail_in = static_cast<uInt>(in.size());
    int ret = Z_OK;
    do {
        strm.next_out = buf.data();
        strm.avail_out = static_cast<uInt>(buf.size());
        ret = inflate(&strm, Z_NO_FLUSH);
        if (ret != Z_OK && ret != Z_STREAM_END) {
            inflateEnd(&strm);
            throw std::runtime_error("gzip: corrupt stream");
        }
        out.insert(out.end(), buf.data(), buf.data() + (buf.size() - strm.avail_out));
    } while (ret != Z_STREAM_END);
    inflateEnd(&strm);
    return out;
}

}  // namespace

std::vector<std::uint8_t> read_file_maybe_gzip(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                    std::istreambuf_iterator<char>());
    if (bytes.size() >= 2 && bytes[0] == 0x1f && bytes[1] == 0x8b) return gunzip(bytes);
    return bytes;
}

ImageSet load_image_set(const std::string& images_path, const std::string& labels_path) {
    ImageSet set = parse_idx_images(read_file_maybe_gzip(images_path));
    set.labels = parse_idx_labels(read_file_maybe_gzip(labels_path));
    if (static_cast<int>(set.labels.size()) != set.count)
        throw std::runtime_error("idx: image and label counts differ (" +
                                 std::to_string(set.count) + " vs " +
                                 std::to_string(set.labels.size()) + ")");
    return set;
}

}  // namespace qelm
