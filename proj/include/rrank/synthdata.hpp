#pragma once
// Synthetic retrieval data with controllable graded relevance.
//
// Every verb class and every noun class gets a random unit direction per
// modality; an item's prototype is the normalized sum of its class
// directions, so items of identical (verb, noun-set) signature share a
// prototype and class overlap shows up as feature similarity. Features are
// prototype + Gaussian noise(sigma), making sigma a signal-to-noise knob.
// Everything is drawn from one seeded stream, so a config pins the dataset
// bit for bit.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rrank/dataset.hpp"
#include "rrank/random.hpp"
#include "rrank/types.hpp"

namespace rrank {

struct SynthConfig {
    int n_items = 512;
    int n_verb_classes = 8;
    int n_noun_classes = 20;
    int nouns_per_item = 2;
    int d_video = 64;
    int d_text = 64;
    double noise_sigma = 0.1;
    std::uint64_t seed = 7;
};

inline void validate(const SynthConfig& cfg) {
    if (cfg.n_items < 1 || cfg.n_verb_classes < 1 || cfg.n_noun_classes < 1 ||
        cfg.nouns_per_item < 1 || cfg.d_video < 1 || cfg.d_text < 1)
        throw std::invalid_argument("synth config: all counts and dimensions must be >= 1");
    if (cfg.nouns_per_item > cfg.n_noun_classes)
        throw std::invalid_argument("synth config: nouns_per_item exceeds n_noun_classes");
    if (cfg.noise_sigma < 0.0)
        throw std::invalid_argument("synth config: noise_sigma must be >= 0");
}

namespace detail {

inline VectorD random_unit(Rng& rng, int dim) {
    VectorD v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rng.normal();
    const double norm = v.norm();
    if (norm == 0.0) return random_unit(rng, dim);
    return v / norm;
}

}  // namespace detail

inline Dataset generate_dataset(const SynthConfig& cfg) {
    validate(cfg);
    Rng rng(cfg.seed);

    // Class directions, one per class and modality, drawn up front in a
    // fixed order.
    std::vector<VectorD> verb_dir_v, verb_dir_t, noun_dir_v, noun_dir_t;
    for (int v = 0; v < cfg.n_verb_classes; ++v) {
        verb_dir_v.push_back(detail::random_unit(rng, cfg.d_video));
        verb_dir_t.push_back(detail::random_unit(rng, cfg.d_text));
    }
    for (int m = 0; m < cfg.n_noun_classes; ++m) {
        noun_dir_v.push_back(detail::random_unit(rng, cfg.d_video));
        noun_dir_t.push_back(detail::random_unit(rng, cfg.d_text));
    }

    Dataset ds;
    ds.videos.resize(cfg.n_items, cfg.d_video);
    ds.texts.resize(cfg.n_items, cfg.d_text);
    ds.annotations.reserve(cfg.n_items);

    std::vector<int> noun_pool(cfg.n_noun_classes);
    for (int i = 0; i < cfg.n_items; ++i) {
        CaptionAnnotation ann;
        char id[16];
        std::snprintf(id, sizeof(id), "c%06d", i);
        ann.id = id;
        ann.verb_classes = {static_cast<int>(rng.below(cfg.n_verb_classes))};
        // Distinct nouns via a partial shuffle of the class pool.
        for (int m = 0; m < cfg.n_noun_classes; ++m) noun_pool[m] = m;
        for (int k = 0; k < cfg.nouns_per_item; ++k) {
            const int j = k + static_cast<int>(rng.below(cfg.n_noun_classes - k));
            std::swap(noun_pool[k], noun_pool[j]);
        }
        ann.noun_classes.assign(noun_pool.begin(), noun_pool.begin() + cfg.nouns_per_item);
        std::sort(ann.noun_classes.begin(), ann.noun_classes.end());

        VectorD proto_v = verb_dir_v[ann.verb_classes[0]];
        VectorD proto_t = verb_dir_t[ann.verb_classes[0]];
        for (int m : ann.noun_classes) {
            proto_v += noun_dir_v[m];
            proto_t += noun_dir_t[m];
        }
        proto_v /= proto_v.norm();
        proto_t /= proto_t.norm();

        for (int c = 0; c < cfg.d_video; ++c)
            ds.videos(i, c) = static_cast<float>(proto_v[c] + cfg.noise_sigma * rng.normal());
        for (int c = 0; c < cfg.d_text; ++c)
            ds.texts(i, c) = static_cast<float>(proto_t[c] + cfg.noise_sigma * rng.normal());
        ds.annotations.push_back(std::move(ann));
    }
    return ds;
}

}  // namespace rrank
