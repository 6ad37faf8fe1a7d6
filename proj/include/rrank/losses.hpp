#pragma once
// Triplet-loss family over a batch of matched video/text pairs.
//
// Variants:
//   FixedMargin      max(0, Δ + s_an - s_ap), hardest in-batch negative.
//   RelevanceMargin  same hinge with margin 1 - R(anchor, negative), so a
//                    nearly relevant negative is pushed less.
//   RANP             a threshold τ splits candidates into a relevant pool
//                    (R >= τ) and an irrelevant negatives pool (R < τ);
//                    the negative is mined only from the irrelevant pool,
//                    and a second hinge (margin Δp) pulls the hardest
//                    "dissimilar yet relevant" pool member toward the anchor.
//
// Losses run over up to four directions (t2v, v2t, v2v, t2t). Candidates are
// the batch items of the opposite modality; for within-modality directions
// the anchor's counterpart is itself and it is excluded from negative
// mining. The batch loss is the direction-weighted mean over anchors, and
// the returned gradients are exact derivatives with respect to every
// encoder parameter (mined indices treated as constant, the standard
// subgradient choice).

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "rrank/encoder.hpp"
#include "rrank/types.hpp"

namespace rrank {

enum class LossVariant { FixedMargin, RelevanceMargin, Ranp };

struct LossConfig {
    LossVariant variant = LossVariant::RelevanceMargin;
    double margin = 0.2;      // Δ: fixed-margin hinge and RANP negative term
    double margin_pos = 0.2;  // Δp: RANP positive term
    double tau = 0.15;        // RANP pool threshold
    // When set, the RANP negative term uses the relevance-based margin
    // 1 - R(a, hn) instead of the fixed Δ.
    bool ranp_relevance_margin = false;
};

struct DirectionWeights {
    double t2v = 1.0;
    double v2t = 1.0;
    double v2v = 0.0;
    double t2t = 0.0;
};

inline double triplet_hinge(double s_ap, double s_an, double margin) {
    return std::max(0.0, margin + s_an - s_ap);
}

// Eq. margin: Δ = 1 - R(a, n).
inline double relevance_margin(double r_an) {
    if (!(r_an >= 0.0 && r_an <= 1.0))
        throw std::invalid_argument("relevance_margin: relevance must be in [0, 1]");
    return 1.0 - r_an;
}

// Both RANP hinge terms for one anchor:
//   max(0, Δ + s_ahn - s_ap) + max(0, Δp + s_ahn - s_ahp)
// where s_ap is the ground-truth similarity, s_ahp the hard positive and
// s_ahn the hard negative.
inline double ranp_terms(double s_ap, double s_ahp, double s_ahn, double margin,
                         double margin_pos) {
    return std::max(0.0, margin + s_ahn - s_ap) +
           std::max(0.0, margin_pos + s_ahn - s_ahp);
}

struct TripletPools {
    int anchor = 0;
    std::vector<int> positives;  // R >= τ (always holds the counterpart)
    std::vector<int> negatives;  // R < τ, counterpart excluded
};

// Splits a batch relevance row at threshold τ. `anchor` is also the index of
// the anchor's matched counterpart (pairs are aligned by position), which is
// never a negative. An empty negatives pool is legal; batch_loss skips such
// anchors.
inline TripletPools ranp_pools(int anchor, std::span<const float> relevance_row,
                               double tau) {
    if (anchor < 0 || static_cast<std::size_t>(anchor) >= relevance_row.size())
        throw std::invalid_argument("ranp_pools: anchor out of range");
    TripletPools pools;
    pools.anchor = anchor;
    for (int j = 0; j < static_cast<int>(relevance_row.size()); ++j) {
        if (relevance_row[j] >= tau)
            pools.positives.push_back(j);
        else if (j != anchor)
            pools.negatives.push_back(j);
    }
    return pools;
}

// Ties broken by lowest index (pools are in increasing index order and the
// comparison is strict).
inline int hardest_negative(const VectorD& sims, const std::vector<int>& pool) {
    int best = pool.front();
    for (int j : pool)
        if (sims[j] > sims[best]) best = j;
    return best;
}

inline int hardest_positive(const VectorD& sims, const std::vector<int>& pool) {
    int best = pool.front();
    for (int j : pool)
        if (sims[j] < sims[best]) best = j;
    return best;
}

struct EncoderGradients {
    MatrixD w_video;
    VectorD b_video;
    MatrixD w_text;
    VectorD b_text;

    static EncoderGradients zeros_like(const DualEncoder& model) {
        EncoderGradients g;
        g.w_video = MatrixD::Zero(model.w_video.rows(), model.w_video.cols());
        g.b_video = VectorD::Zero(model.b_video.size());
        g.w_text = MatrixD::Zero(model.w_text.rows(), model.w_text.cols());
        g.b_text = VectorD::Zero(model.b_text.size());
        return g;
    }
};

struct BatchLossResult {
    double loss = 0.0;
    EncoderGradients grads;
    // RANP anchors whose negatives pool was empty; they contribute zero loss.
    // Counted once per direction.
    int skipped_anchors = 0;
};

namespace detail {

struct BatchEmbeddings {
    MatrixD embeds;  // B x d, unit rows
    VectorD norms;   // pre-normalization norms
};

inline BatchEmbeddings embed_batch(const DualEncoder& model, Side side,
                                   const MatrixD& features) {
    const MatrixD& w = (side == Side::Video) ? model.w_video : model.w_text;
    const VectorD& b = (side == Side::Video) ? model.b_video : model.b_text;
    BatchEmbeddings out;
    out.embeds = features * w;
    out.embeds.rowwise() += b.transpose();
    out.norms.resize(features.rows());
    for (Eigen::Index i = 0; i < features.rows(); ++i) {
        const double norm = out.embeds.row(i).norm();
        if (norm <= 1e-12)
            throw DegenerateEmbeddingError("batch_loss: degenerate embedding at row " +
                                           std::to_string(i));
        out.norms[i] = norm;
        out.embeds.row(i) /= norm;
    }
    return out;
}

// d(loss)/d(features * w + b) given d(loss)/d(unit embedding): the
// normalization Jacobian projects out the radial component.
inline MatrixD backprop_normalization(const BatchEmbeddings& be, const MatrixD& d_embeds) {
    MatrixD d_raw(d_embeds.rows(), d_embeds.cols());
    for (Eigen::Index i = 0; i < d_embeds.rows(); ++i) {
        const double radial = d_embeds.row(i).dot(be.embeds.row(i));
        d_raw.row(i) = (d_embeds.row(i) - radial * be.embeds.row(i)) / be.norms[i];
    }
    return d_raw;
}

}  // namespace detail

// Loss and exact analytic gradients for one batch. `video_features` and
// `text_features` are matched row-for-row; `relevance` is the B x B slice
// R(item_i, item_j) shared by all directions.
inline BatchLossResult batch_loss(const DualEncoder& model, const MatrixD& video_features,
                                  const MatrixD& text_features, const MatrixF& relevance,
                                  const LossConfig& config,
                                  const DirectionWeights& weights = {}) {
    const Eigen::Index batch = video_features.rows();
    if (batch < 2) throw std::invalid_argument("batch_loss: batch size must be >= 2");
    if (text_features.rows() != batch)
        throw std::invalid_argument("batch_loss: video/text row counts differ");
    if (relevance.rows() != batch || relevance.cols() != batch)
        throw std::invalid_argument("batch_loss: relevance slice must be batch x batch");
    if (video_features.cols() != model.video_dim() ||
        text_features.cols() != model.text_dim())
        throw std::invalid_argument("batch_loss: feature dimensions do not match model");

    const auto ev = detail::embed_batch(model, Side::Video, video_features);
    const auto et = detail::embed_batch(model, Side::Text, text_features);

    BatchLossResult result;
    result.grads = EncoderGradients::zeros_like(model);
    MatrixD d_ev = MatrixD::Zero(batch, model.embed_dim());
    MatrixD d_et = MatrixD::Zero(batch, model.embed_dim());

    struct Direction {
        double weight;
        const MatrixD* anchors;
        const MatrixD* candidates;
        MatrixD* d_anchors;
        MatrixD* d_candidates;
    };
    const Direction directions[] = {
        {weights.t2v, &et.embeds, &ev.embeds, &d_et, &d_ev},
        {weights.v2t, &ev.embeds, &et.embeds, &d_ev, &d_et},
        {weights.v2v, &ev.embeds, &ev.embeds, &d_ev, &d_ev},
        {weights.t2t, &et.embeds, &et.embeds, &d_et, &d_et},
    };

    for (const Direction& dir : directions) {
        if (dir.weight <= 0.0) continue;
        const MatrixD sims = *dir.anchors * dir.candidates->transpose();
        const double scale = dir.weight / static_cast<double>(batch);
        MatrixD d_sims = MatrixD::Zero(batch, batch);

        for (int i = 0; i < batch; ++i) {
            const VectorD sim_row = sims.row(i).transpose();
            const double s_ap = sim_row[i];

            if (config.variant == LossVariant::Ranp) {
                const std::span<const float> rel_row(relevance.data() + i * batch,
                                                     static_cast<std::size_t>(batch));
                const TripletPools pools = ranp_pools(i, rel_row, config.tau);
                if (pools.negatives.empty()) {
                    ++result.skipped_anchors;
                    continue;
                }
                const int hn = hardest_negative(sim_row, pools.negatives);
                const int hp = hardest_positive(sim_row, pools.positives);
                const double neg_margin =
                    config.ranp_relevance_margin
                        ? relevance_margin(static_cast<double>(relevance(i, hn)))
                        : config.margin;
                const double h1 = neg_margin + sim_row[hn] - s_ap;
                const double h2 = config.margin_pos + sim_row[hn] - sim_row[hp];
                if (h1 > 0.0) {
                    result.loss += scale * h1;
                    d_sims(i, hn) += scale;
                    d_sims(i, i) -= scale;
                }
                if (h2 > 0.0) {
                    result.loss += scale * h2;
                    d_sims(i, hn) += scale;
                    d_sims(i, hp) -= scale;
                }
            } else {
                // All non-matching candidates compete; hardest wins.
                std::vector<int> candidates;
                candidates.reserve(batch - 1);
                for (int j = 0; j < batch; ++j)
                    if (j != i) candidates.push_back(j);
                const int n = hardest_negative(sim_row, candidates);
                const double margin =
                    config.variant == LossVariant::RelevanceMargin
                        ? relevance_margin(static_cast<double>(relevance(i, n)))
                        : config.margin;
                const double h = margin + sim_row[n] - s_ap;
                if (h > 0.0) {
                    result.loss += scale * h;
                    d_sims(i, n) += scale;
                    d_sims(i, i) -= scale;
                }
            }
        }

        *dir.d_anchors += d_sims * (*dir.candidates);
        *dir.d_candidates += d_sims.transpose() * (*dir.anchors);
    }

    const MatrixD d_raw_v = detail::backprop_normalization(ev, d_ev);
    const MatrixD d_raw_t = detail::backprop_normalization(et, d_et);
    result.grads.w_video = video_features.transpose() * d_raw_v;
    result.grads.b_video = d_raw_v.colwise().sum().transpose();
    result.grads.w_text = text_features.transpose() * d_raw_t;
    result.grads.b_text = d_raw_t.colwise().sum().transpose();
    return result;
}

}  // namespace rrank
