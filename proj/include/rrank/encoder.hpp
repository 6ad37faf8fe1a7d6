#pragma once
// Minimal dual encoder: one linear projection per modality into a shared
// embedding space, L2-normalized so that dot products are cosine
// similarities. Weights are stored input_dim x embed_dim, i.e. an embedding
// is normalize(W^T x + b).

#include <cmath>
#include <stdexcept>
#include <string>

#include "rrank/random.hpp"
#include "rrank/types.hpp"

namespace rrank {

enum class Side { Video, Text };

struct DualEncoder {
    MatrixD w_video;  // d_video x d
    VectorD b_video;  // d
    MatrixD w_text;   // d_text x d
    VectorD b_text;   // d

    Eigen::Index video_dim() const { return w_video.rows(); }
    Eigen::Index text_dim() const { return w_text.rows(); }
    Eigen::Index embed_dim() const { return w_video.cols(); }
};

class DegenerateEmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Xavier-uniform weights, |w| <= sqrt(6 / (fan_in + fan_out)), zero biases.
// The draw order (video weights row-major, then text weights) is fixed, so a
// seed pins every parameter.
inline DualEncoder init_model(std::uint64_t seed, int d_video, int d_text, int d) {
    if (d_video < 1 || d_text < 1 || d < 1)
        throw std::invalid_argument("init_model: all dimensions must be >= 1");
    Rng rng(seed);
    DualEncoder model;
    model.w_video.resize(d_video, d);
    model.w_text.resize(d_text, d);
    model.b_video = VectorD::Zero(d);
    model.b_text = VectorD::Zero(d);

    const double bound_v = std::sqrt(6.0 / (d_video + d));
    for (Eigen::Index r = 0; r < d_video; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            model.w_video(r, c) = rng.uniform(-bound_v, bound_v);
    const double bound_t = std::sqrt(6.0 / (d_text + d));
    for (Eigen::Index r = 0; r < d_text; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            model.w_text(r, c) = rng.uniform(-bound_t, bound_t);
    return model;
}

// normalize(W^T x + b). Throws on dimension mismatch and when the
// pre-normalization norm falls below 1e-12.
inline VectorD embed(const DualEncoder& model, Side side, const VectorD& features) {
    const MatrixD& w = (side == Side::Video) ? model.w_video : model.w_text;
    const VectorD& b = (side == Side::Video) ? model.b_video : model.b_text;
    if (features.size() != w.rows())
        throw std::invalid_argument(
            "embed: feature length " + std::to_string(features.size()) +
            " does not match input dimension " + std::to_string(w.rows()));
    VectorD z = w.transpose() * features + b;
    const double norm = z.norm();
    if (norm <= 1e-12)
        throw DegenerateEmbeddingError("embed: pre-normalization norm <= 1e-12");
    return z / norm;
}

// Cosine similarity of every video row against every text row. Each entry is
// computed as embed(video_i) . embed(text_j), so a pointwise recomputation
// through the public embed() reproduces the matrix bit for bit.
inline MatrixF similarity_matrix(const DualEncoder& model, const MatrixF& video_features,
                                 const MatrixF& text_features) {
    if (video_features.cols() != model.video_dim() ||
        text_features.cols() != model.text_dim())
        throw std::invalid_argument("similarity_matrix: feature dimensions do not match model");

    std::vector<VectorD> video_embeds(video_features.rows());
    for (Eigen::Index i = 0; i < video_features.rows(); ++i)
        video_embeds[i] = embed(model, Side::Video,
                                video_features.row(i).cast<double>().transpose());
    std::vector<VectorD> text_embeds(text_features.rows());
    for (Eigen::Index j = 0; j < text_features.rows(); ++j)
        text_embeds[j] = embed(model, Side::Text,
                               text_features.row(j).cast<double>().transpose());

    MatrixF sim(video_features.rows(), text_features.rows());
    for (Eigen::Index i = 0; i < sim.rows(); ++i)
        for (Eigen::Index j = 0; j < sim.cols(); ++j) {
            float s = static_cast<float>(video_embeds[i].dot(text_embeds[j]));
            sim(i, j) = std::min(1.0f, std::max(-1.0f, s));
        }
    return sim;
}

}  // namespace rrank
