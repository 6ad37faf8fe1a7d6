#pragma once
// Class-IoU relevance between two annotated items:
//
//   R(a, b) = 0.5 * (IoU(verbs_a, verbs_b) + IoU(nouns_a, nouns_b))
//
// The PoS-restricted modes pin one of the two IoU terms to 1, which is how
// noun-level (respectively verb-level) training treats the other tag.
// Symmetric, in [0, 1], and 1 on identical annotations.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rrank/annotations.hpp"
#include "rrank/types.hpp"

namespace rrank {

// |X ∩ Y| / |X ∪ Y| over sorted unique vectors. Both sets must be non-empty.
inline double set_iou(const std::vector<int>& x, const std::vector<int>& y) {
    std::size_t i = 0, j = 0, common = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] < y[j]) ++i;
        else if (y[j] < x[i]) ++j;
        else { ++common; ++i; ++j; }
    }
    return static_cast<double>(common) /
           static_cast<double>(x.size() + y.size() - common);
}

inline double relevance(const CaptionAnnotation& a, const CaptionAnnotation& b,
                        RelevanceMode mode = RelevanceMode::Full) {
    const double verb_iou = (mode == RelevanceMode::VerbFixedToOne)
                                ? 1.0
                                : set_iou(a.verb_classes, b.verb_classes);
    const double noun_iou = (mode == RelevanceMode::NounFixedToOne)
                                ? 1.0
                                : set_iou(a.noun_classes, b.noun_classes);
    return 0.5 * (verb_iou + noun_iou);
}

// Dense relevance between two item lists; entry (i, j) = relevance(a_i, b_j).
// Values are materialized as 32-bit floats, the width used by similarity
// matrices and file formats.
inline MatrixF relevance_matrix(const std::vector<CaptionAnnotation>& items_a,
                                const std::vector<CaptionAnnotation>& items_b,
                                RelevanceMode mode = RelevanceMode::Full) {
    if (items_a.empty() || items_b.empty())
        throw std::invalid_argument("relevance_matrix: item lists must be non-empty");
    MatrixF m(items_a.size(), items_b.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = static_cast<float>(relevance(items_a[i], items_b[j], mode));
    return m;
}

}  // namespace rrank
