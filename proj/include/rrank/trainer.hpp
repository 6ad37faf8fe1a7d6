#pragma once
// Training loop: seeded batch scheduling, SGD-with-momentum and Adam, and a
// finite-difference gradient checker. Given the same data and config, two
// runs produce bit-identical loss trajectories.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rrank/dataset.hpp"
#include "rrank/encoder.hpp"
#include "rrank/losses.hpp"
#include "rrank/metrics.hpp"
#include "rrank/relevance.hpp"
#include "rrank/types.hpp"

namespace rrank {

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SgdConfig {
    double lr = 0.01;
    double momentum = 0.9;
};

struct AdamConfig {
    double lr = 1e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

using OptimizerConfig = std::variant<SgdConfig, AdamConfig>;

struct TrainConfig {
    LossConfig loss;
    DirectionWeights directions;
    OptimizerConfig optimizer = AdamConfig{};
    int batch_size = 64;
    int epochs = 50;
    std::uint64_t seed = 42;
    RelevanceMode relevance_mode = RelevanceMode::Full;
    int embedding_dim = 512;
    bool use_bias = true;       // when false, biases stay at their zero init
    bool select_best = false;   // return the best-validation model instead of the last
    double val_fraction = 0.1;  // consumed by callers that split (CLI)
    std::uint64_t split_seed = 13;
    double map_threshold = 0.0;
};

inline double learning_rate(const OptimizerConfig& cfg) {
    return std::visit([](const auto& c) { return c.lr; }, cfg);
}

inline void validate(const TrainConfig& cfg) {
    if (cfg.batch_size < 2) throw std::invalid_argument("train config: batch_size must be >= 2");
    if (cfg.epochs < 1) throw std::invalid_argument("train config: epochs must be >= 1");
    if (cfg.embedding_dim < 1)
        throw std::invalid_argument("train config: embedding_dim must be >= 1");
    if (learning_rate(cfg.optimizer) <= 0.0)
        throw std::invalid_argument("train config: learning rate must be > 0");
    const DirectionWeights& w = cfg.directions;
    if (w.t2v < 0 || w.v2t < 0 || w.v2v < 0 || w.t2t < 0)
        throw std::invalid_argument("train config: direction weights must be >= 0");
    if (w.t2v + w.v2t + w.v2v + w.t2t <= 0.0)
        throw std::invalid_argument("train config: at least one direction weight must be > 0");
    if (cfg.loss.margin < 0 || cfg.loss.margin_pos < 0)
        throw std::invalid_argument("train config: margins must be >= 0");
    if (cfg.loss.tau < 0.0 || cfg.loss.tau > 1.0)
        throw std::invalid_argument("train config: tau must be in [0, 1]");
    if (cfg.val_fraction < 0.0 || cfg.val_fraction >= 1.0)
        throw std::invalid_argument("train config: val_fraction must be in [0, 1)");
}

// Seeded permutation of 0..n-1, chunked into batches; a trailing chunk with
// fewer than 2 items is dropped. The shuffle seed mixes the epoch so batch
// order differs between epochs but stays reproducible.
inline std::vector<std::vector<int>> make_batches(int n_items, int batch_size,
                                                  std::uint64_t seed, int epoch) {
    if (n_items < 2) throw std::invalid_argument("make_batches: n_items must be >= 2");
    if (batch_size < 2) throw std::invalid_argument("make_batches: batch_size must be >= 2");
    std::vector<int> perm(n_items);
    for (int i = 0; i < n_items; ++i) perm[i] = i;
    Rng rng(seed ^ static_cast<std::uint64_t>(epoch));
    rng.shuffle(perm);
    std::vector<std::vector<int>> batches;
    for (int start = 0; start < n_items; start += batch_size) {
        const int end = std::min(n_items, start + batch_size);
        if (end - start < 2) break;
        batches.emplace_back(perm.begin() + start, perm.begin() + end);
    }
    return batches;
}

struct SgdState {
    EncoderGradients velocity;
};

struct AdamState {
    EncoderGradients m;
    EncoderGradients v;
    long step = 0;
};

using OptimizerState = std::variant<SgdState, AdamState>;

inline OptimizerState make_optimizer_state(const DualEncoder& model,
                                           const OptimizerConfig& cfg) {
    if (std::holds_alternative<SgdConfig>(cfg))
        return SgdState{EncoderGradients::zeros_like(model)};
    return AdamState{EncoderGradients::zeros_like(model), EncoderGradients::zeros_like(model), 0};
}

namespace detail {

struct BlockRef {
    const char* name;
    double* param;
    const double* grad;
    double* aux1;  // SGD velocity / Adam first moment
    double* aux2;  // Adam second moment (null for SGD)
    Eigen::Index size;
};

template <typename Fn>
inline void for_each_block(DualEncoder& model, const EncoderGradients& grads,
                           EncoderGradients* aux1, EncoderGradients* aux2, Fn&& fn) {
    const BlockRef blocks[] = {
        {"W_video", model.w_video.data(), grads.w_video.data(),
         aux1 ? aux1->w_video.data() : nullptr, aux2 ? aux2->w_video.data() : nullptr,
         model.w_video.size()},
        {"b_video", model.b_video.data(), grads.b_video.data(),
         aux1 ? aux1->b_video.data() : nullptr, aux2 ? aux2->b_video.data() : nullptr,
         model.b_video.size()},
        {"W_text", model.w_text.data(), grads.w_text.data(),
         aux1 ? aux1->w_text.data() : nullptr, aux2 ? aux2->w_text.data() : nullptr,
         model.w_text.size()},
        {"b_text", model.b_text.data(), grads.b_text.data(),
         aux1 ? aux1->b_text.data() : nullptr, aux2 ? aux2->b_text.data() : nullptr,
         model.b_text.size()},
    };
    for (const BlockRef& b : blocks) fn(b);
}

}  // namespace detail

// One optimizer update in place. SGD: v <- momentum*v + g; w <- w - lr*v.
// Adam: bias-corrected update with the configured (beta1, beta2, eps).
// A non-finite gradient aborts, naming the offending parameter block.
inline void optimizer_step(DualEncoder& params, const EncoderGradients& grads,
                           OptimizerState& state, const OptimizerConfig& config) {
    if (std::holds_alternative<SgdConfig>(config)) {
        const SgdConfig& c = std::get<SgdConfig>(config);
        SgdState& s = std::get<SgdState>(state);
        detail::for_each_block(params, grads, &s.velocity, nullptr, [&](const detail::BlockRef& b) {
            for (Eigen::Index i = 0; i < b.size; ++i) {
                if (!std::isfinite(b.grad[i]))
                    throw NumericError(std::string("non-finite gradient in block ") + b.name);
                b.aux1[i] = c.momentum * b.aux1[i] + b.grad[i];
                b.param[i] -= c.lr * b.aux1[i];
            }
        });
        return;
    }
    const AdamConfig& c = std::get<AdamConfig>(config);
    AdamState& s = std::get<AdamState>(state);
    ++s.step;
    const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(s.step));
    const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(s.step));
    detail::for_each_block(params, grads, &s.m, &s.v, [&](const detail::BlockRef& b) {
        for (Eigen::Index i = 0; i < b.size; ++i) {
            const double g = b.grad[i];
            if (!std::isfinite(g))
                throw NumericError(std::string("non-finite gradient in block ") + b.name);
            b.aux1[i] = c.beta1 * b.aux1[i] + (1.0 - c.beta1) * g;
            b.aux2[i] = c.beta2 * b.aux2[i] + (1.0 - c.beta2) * g * g;
            const double m_hat = b.aux1[i] / bc1;
            const double v_hat = b.aux2[i] / bc2;
            b.param[i] -= c.lr * m_hat / (std::sqrt(v_hat) + c.eps);
        }
    });
}

struct EpochStats {
    int epoch = 0;  // 1-based
    double mean_loss = 0.0;
    long skipped_anchors = 0;
    std::optional<MetricReport> validation;
};

struct TrainHistory {
    std::vector<EpochStats> epochs;
};

struct TrainResult {
    DualEncoder model;
    TrainHistory history;
};

// Runs epochs x batches of batch_loss + optimizer_step. When a validation
// set is given, it is scored after every epoch; with select_best the
// checkpoint with the highest validation ndcg_avg is returned instead of the
// final one.
inline TrainResult train(const Dataset& train_set, const TrainConfig& cfg,
                         const Dataset* validation = nullptr) {
    validate(cfg);
    check_dataset(train_set);
    const int n = static_cast<int>(train_set.size());
    if (n < 2) throw std::invalid_argument("train: dataset must hold at least 2 items");
    if (validation) check_dataset(*validation);

    DualEncoder model = init_model(cfg.seed, static_cast<int>(train_set.videos.cols()),
                                   static_cast<int>(train_set.texts.cols()),
                                   cfg.embedding_dim);
    OptimizerState opt_state = make_optimizer_state(model, cfg.optimizer);

    const MatrixD videos = train_set.videos.cast<double>();
    const MatrixD texts = train_set.texts.cast<double>();
    const MatrixF rel_full =
        relevance_matrix(train_set.annotations, train_set.annotations, cfg.relevance_mode);
    MatrixF rel_val;
    if (validation)
        rel_val = relevance_matrix(validation->annotations, validation->annotations,
                                   cfg.relevance_mode);

    TrainResult result;
    DualEncoder best_model;
    double best_score = -1.0;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        const auto batches = make_batches(n, cfg.batch_size, cfg.seed, epoch);
        double loss_sum = 0.0;
        long skipped = 0;
        for (std::size_t b = 0; b < batches.size(); ++b) {
            const std::vector<int>& idx = batches[b];
            const Eigen::Index bs = static_cast<Eigen::Index>(idx.size());
            MatrixD vb(bs, videos.cols()), tb(bs, texts.cols());
            MatrixF rb(bs, bs);
            for (Eigen::Index r = 0; r < bs; ++r) {
                vb.row(r) = videos.row(idx[r]);
                tb.row(r) = texts.row(idx[r]);
                for (Eigen::Index c = 0; c < bs; ++c) rb(r, c) = rel_full(idx[r], idx[c]);
            }
            try {
                BatchLossResult res = batch_loss(model, vb, tb, rb, cfg.loss, cfg.directions);
                if (!std::isfinite(res.loss))
                    throw NumericError("non-finite loss");
                if (!cfg.use_bias) {
                    res.grads.b_video.setZero();
                    res.grads.b_text.setZero();
                }
                optimizer_step(model, res.grads, opt_state, cfg.optimizer);
                loss_sum += res.loss;
                skipped += res.skipped_anchors;
            } catch (const NumericError& e) {
                throw NumericError("epoch " + std::to_string(epoch + 1) + ", batch " +
                                   std::to_string(b + 1) + ": " + e.what());
            }
        }

        EpochStats stats;
        stats.epoch = epoch + 1;
        stats.mean_loss = loss_sum / static_cast<double>(batches.size());
        stats.skipped_anchors = skipped;
        if (validation) {
            const MatrixF sim = similarity_matrix(model, validation->videos, validation->texts);
            stats.validation = evaluate_retrieval(sim, rel_val, cfg.map_threshold);
            if (cfg.select_best && stats.validation->ndcg_avg > best_score) {
                best_score = stats.validation->ndcg_avg;
                best_model = model;
            }
        }
        result.history.epochs.push_back(std::move(stats));
    }

    result.model = (cfg.select_best && best_score >= 0.0) ? std::move(best_model)
                                                          : std::move(model);
    return result;
}

// Central finite differences over every parameter against a supplied
// gradient. Returns the max relative error with denominator
// max(|analytic|, |numeric|, 1e-8).
inline double grad_check_against(const DualEncoder& model, const MatrixD& video_features,
                                 const MatrixD& text_features, const MatrixF& relevance,
                                 const LossConfig& loss_cfg, const DirectionWeights& weights,
                                 const EncoderGradients& analytic, double eps = 1e-4) {
    if (!(eps > 0.0 && eps <= 1e-2))
        throw std::invalid_argument("grad_check: eps must be in (0, 1e-2]");
    DualEncoder probe = model;
    double max_rel_err = 0.0;
    auto loss_at = [&]() {
        return batch_loss(probe, video_features, text_features, relevance, loss_cfg, weights)
            .loss;
    };
    detail::for_each_block(probe, analytic, nullptr, nullptr, [&](const detail::BlockRef& b) {
        for (Eigen::Index i = 0; i < b.size; ++i) {
            const double saved = b.param[i];
            b.param[i] = saved + eps;
            const double loss_plus = loss_at();
            b.param[i] = saved - eps;
            const double loss_minus = loss_at();
            b.param[i] = saved;
            const double numeric = (loss_plus - loss_minus) / (2.0 * eps);
            const double denom = std::max({std::abs(b.grad[i]), std::abs(numeric), 1e-8});
            max_rel_err = std::max(max_rel_err, std::abs(b.grad[i] - numeric) / denom);
        }
    });
    return max_rel_err;
}

// Same check against the gradients batch_loss itself reports.
inline double grad_check(const DualEncoder& model, const MatrixD& video_features,
                         const MatrixD& text_features, const MatrixF& relevance,
                         const LossConfig& loss_cfg, const DirectionWeights& weights,
                         double eps = 1e-4) {
    const BatchLossResult analytic =
        batch_loss(model, video_features, text_features, relevance, loss_cfg, weights);
    return grad_check_against(model, video_features, text_features, relevance, loss_cfg,
                              weights, analytic.grads, eps);
}

}  // namespace rrank
