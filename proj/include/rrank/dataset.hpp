#pragma once
// A retrieval dataset: video features, text features, and one annotation per
// matched row. Row i of the video matrix and row i of the text matrix
// describe the same item.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rrank/annotations.hpp"
#include "rrank/random.hpp"
#include "rrank/types.hpp"

namespace rrank {

struct Dataset {
    MatrixF videos;  // n x d_video
    MatrixF texts;   // n x d_text
    std::vector<CaptionAnnotation> annotations;

    Eigen::Index size() const { return videos.rows(); }
};

inline void check_dataset(const Dataset& ds) {
    if (ds.videos.rows() != ds.texts.rows() ||
        ds.videos.rows() != static_cast<Eigen::Index>(ds.annotations.size()))
        throw std::invalid_argument("dataset: row counts of videos, texts and annotations differ");
}

inline Dataset subset(const Dataset& ds, const std::vector<int>& indices) {
    Dataset out;
    out.videos.resize(indices.size(), ds.videos.cols());
    out.texts.resize(indices.size(), ds.texts.cols());
    out.annotations.reserve(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        out.videos.row(k) = ds.videos.row(indices[k]);
        out.texts.row(k) = ds.texts.row(indices[k]);
        out.annotations.push_back(ds.annotations[indices[k]]);
    }
    return out;
}

struct SplitIndices {
    std::vector<int> train;
    std::vector<int> val;
};

// Seeded split: a shuffled permutation of 0..n-1, the first round(n *
// fraction) indices becoming the validation set. Both halves are returned in
// ascending order. The split seed is independent of the training seed so
// that different models trained on the same data share a validation set.
inline SplitIndices validation_split(int n_items, double fraction, std::uint64_t seed) {
    if (n_items < 2) throw std::invalid_argument("validation_split: need at least 2 items");
    if (fraction < 0.0 || fraction >= 1.0)
        throw std::invalid_argument("validation_split: fraction must be in [0, 1)");
    std::vector<int> perm(n_items);
    for (int i = 0; i < n_items; ++i) perm[i] = i;
    Rng rng(seed);
    rng.shuffle(perm);
    const int n_val = static_cast<int>(std::round(fraction * n_items));
    SplitIndices split;
    split.val.assign(perm.begin(), perm.begin() + n_val);
    split.train.assign(perm.begin() + n_val, perm.end());
    std::sort(split.val.begin(), split.val.end());
    std::sort(split.train.begin(), split.train.end());
    if (split.train.size() < 2)
        throw std::invalid_argument("validation_split: fewer than 2 training items left");
    return split;
}

}  // namespace rrank
