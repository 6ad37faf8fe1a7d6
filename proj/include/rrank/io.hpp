#pragma once
// Binary file formats. Both are little-endian and bit-exact round-trippable.
//
// FMAT (feature / similarity / relevance matrices):
//   magic "FMAT", u32 version = 1, u32 rows, u32 cols,
//   rows * cols float32 values, row-major.
//
// Checkpoint (dual encoder):
//   magic "RRNK", u32 version = 1, u32 d_video, u32 d_text, u32 d,
//   then W_video (d_video x d), b_video (d), W_text (d_text x d),
//   b_text (d) as float32, row-major.
//
// Model parameters live in double precision in memory; saving rounds them to
// float32, so save(load(f)) reproduces f exactly.

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

#include "rrank/encoder.hpp"
#include "rrank/types.hpp"

namespace rrank {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::uint32_t bswap32(std::uint32_t v) {
    return ((v & 0xFFu) << 24) | ((v & 0xFF00u) << 8) | ((v >> 8) & 0xFF00u) | (v >> 24);
}

inline void write_u32(std::ostream& out, std::uint32_t v) {
    if constexpr (std::endian::native == std::endian::big) v = bswap32(v);
    out.write(reinterpret_cast<const char*>(&v), 4);
}

inline std::uint32_t read_u32(std::istream& in, const std::string& file) {
    std::uint32_t v = 0;
    in.read(reinterpret_cast<char*>(&v), 4);
    if (!in) throw FormatError(file + ": truncated file");
    if constexpr (std::endian::native == std::endian::big) v = bswap32(v);
    return v;
}

inline void write_f32(std::ostream& out, float f) {
    std::uint32_t v = std::bit_cast<std::uint32_t>(f);
    if constexpr (std::endian::native == std::endian::big) v = bswap32(v);
    out.write(reinterpret_cast<const char*>(&v), 4);
}

inline float read_f32(std::istream& in, const std::string& file) {
    return std::bit_cast<float>(read_u32(in, file));
}

inline void write_magic(std::ostream& out, const char magic[4]) { out.write(magic, 4); }

inline void check_magic(std::istream& in, const char magic[4], const std::string& file) {
    char buf[4] = {};
    in.read(buf, 4);
    if (!in || std::memcmp(buf, magic, 4) != 0)
        throw FormatError(file + ": bad magic (expected " + std::string(magic, 4) + ")");
}

inline std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

inline std::ifstream open_in(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    return in;
}

}  // namespace detail

inline void write_fmat(const std::filesystem::path& path, const MatrixF& m) {
    auto out = detail::open_out(path);
    detail::write_magic(out, "FMAT");
    detail::write_u32(out, 1);
    detail::write_u32(out, static_cast<std::uint32_t>(m.rows()));
    detail::write_u32(out, static_cast<std::uint32_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) detail::write_f32(out, m(i, j));
    if (!out) throw IoError("write failed: " + path.string());
}

inline MatrixF read_fmat(const std::filesystem::path& path) {
    auto in = detail::open_in(path);
    const std::string name = path.string();
    detail::check_magic(in, "FMAT", name);
    const std::uint32_t version = detail::read_u32(in, name);
    if (version != 1)
        throw FormatError(name + ": unsupported FMAT version " + std::to_string(version));
    const std::uint32_t rows = detail::read_u32(in, name);
    const std::uint32_t cols = detail::read_u32(in, name);
    MatrixF m(rows, cols);
    for (std::uint32_t i = 0; i < rows; ++i)
        for (std::uint32_t j = 0; j < cols; ++j) m(i, j) = detail::read_f32(in, name);
    in.peek();
    if (!in.eof()) throw FormatError(name + ": trailing bytes after matrix data");
    return m;
}

inline void save_checkpoint(const std::filesystem::path& path, const DualEncoder& model) {
    auto out = detail::open_out(path);
    detail::write_magic(out, "RRNK");
    detail::write_u32(out, 1);
    detail::write_u32(out, static_cast<std::uint32_t>(model.video_dim()));
    detail::write_u32(out, static_cast<std::uint32_t>(model.text_dim()));
    detail::write_u32(out, static_cast<std::uint32_t>(model.embed_dim()));
    auto write_block = [&](const auto& block) {
        for (Eigen::Index i = 0; i < block.rows(); ++i)
            for (Eigen::Index j = 0; j < block.cols(); ++j)
                detail::write_f32(out, static_cast<float>(block(i, j)));
    };
    write_block(model.w_video);
    write_block(model.b_video);
    write_block(model.w_text);
    write_block(model.b_text);
    if (!out) throw IoError("write failed: " + path.string());
}

inline DualEncoder load_checkpoint(const std::filesystem::path& path) {
    auto in = detail::open_in(path);
    const std::string name = path.string();
    detail::check_magic(in, "RRNK", name);
    const std::uint32_t version = detail::read_u32(in, name);
    if (version != 1)
        throw FormatError(name + ": unsupported checkpoint version " + std::to_string(version));
    const std::uint32_t d_video = detail::read_u32(in, name);
    const std::uint32_t d_text = detail::read_u32(in, name);
    const std::uint32_t d = detail::read_u32(in, name);
    if (d_video == 0 || d_text == 0 || d == 0)
        throw FormatError(name + ": zero dimension in header");
    DualEncoder model;
    model.w_video.resize(d_video, d);
    model.b_video.resize(d);
    model.w_text.resize(d_text, d);
    model.b_text.resize(d);
    auto read_block = [&](MatrixD& block) {
        for (Eigen::Index i = 0; i < block.rows(); ++i)
            for (Eigen::Index j = 0; j < block.cols(); ++j)
                block(i, j) = static_cast<double>(detail::read_f32(in, name));
    };
    read_block(model.w_video);
    auto read_vector = [&](VectorD& vec) {
        for (Eigen::Index i = 0; i < vec.size(); ++i)
            vec[i] = static_cast<double>(detail::read_f32(in, name));
    };
    read_vector(model.b_video);
    read_block(model.w_text);
    read_vector(model.b_text);
    in.peek();
    if (!in.eof()) throw FormatError(name + ": trailing bytes after parameters");
    return model;
}

}  // namespace rrank
