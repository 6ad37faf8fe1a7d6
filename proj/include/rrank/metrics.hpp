#pragma once
// Rank-aware retrieval evaluation: graded-gain nDCG and binarized mAP,
// reported per direction (video-to-text, text-to-video) and averaged.
//
// Ranking is by descending similarity with ties broken by ascending index.
// nDCG uses gain / log2(rank + 1) with ranks starting at 1; mAP counts an
// item as positive when its relevance exceeds the threshold (strictly).
// Queries whose gains are all zero score 0 and stay in the mean.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "rrank/types.hpp"

namespace rrank {

struct MetricReport {
    double ndcg_v2t = 0.0;
    double ndcg_t2v = 0.0;
    double ndcg_avg = 0.0;
    double map_v2t = 0.0;
    double map_t2v = 0.0;
    double map_avg = 0.0;
};

// nDCG of one query given the gains in ranked order. Returns 0 when every
// gain is zero.
inline double ndcg_query(std::span<const double> gains_in_ranked_order) {
    if (gains_in_ranked_order.empty())
        throw std::invalid_argument("ndcg_query: empty gains vector");
    double dcg = 0.0;
    for (std::size_t i = 0; i < gains_in_ranked_order.size(); ++i)
        dcg += gains_in_ranked_order[i] / std::log2(static_cast<double>(i) + 2.0);
    std::vector<double> ideal(gains_in_ranked_order.begin(), gains_in_ranked_order.end());
    std::sort(ideal.begin(), ideal.end(), std::greater<double>());
    double idcg = 0.0;
    for (std::size_t i = 0; i < ideal.size(); ++i)
        idcg += ideal[i] / std::log2(static_cast<double>(i) + 2.0);
    if (idcg == 0.0) return 0.0;
    return dcg / idcg;
}

// Average precision of one query given binary flags in ranked order; 0 when
// there are no positives.
inline double average_precision(const std::vector<bool>& relevant_flags_in_ranked_order) {
    if (relevant_flags_in_ranked_order.empty())
        throw std::invalid_argument("average_precision: empty flags vector");
    std::size_t hits = 0;
    double sum = 0.0;
    for (std::size_t p = 0; p < relevant_flags_in_ranked_order.size(); ++p) {
        if (relevant_flags_in_ranked_order[p]) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(p + 1);
        }
    }
    if (hits == 0) return 0.0;
    return sum / static_cast<double>(hits);
}

namespace detail {

// Candidate order for one query: descending score, ties by ascending index.
inline std::vector<int> ranked_order(const std::vector<float>& scores) {
    std::vector<int> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return a < b;
    });
    return order;
}

}  // namespace detail

// Evaluates both retrieval directions of a similarity matrix against a
// relevance matrix of the same shape.
inline MetricReport evaluate_retrieval(const MatrixF& similarity, const MatrixF& relevance,
                                       double map_threshold = 0.0) {
    if (similarity.rows() != relevance.rows() || similarity.cols() != relevance.cols())
        throw std::invalid_argument("evaluate_retrieval: similarity and relevance shapes differ");
    if (similarity.rows() == 0 || similarity.cols() == 0)
        throw std::invalid_argument("evaluate_retrieval: empty matrix");

    const Eigen::Index n_videos = similarity.rows();
    const Eigen::Index n_texts = similarity.cols();

    double ndcg_v2t = 0.0, map_v2t = 0.0;
    std::vector<float> scores(static_cast<std::size_t>(n_texts));
    for (Eigen::Index i = 0; i < n_videos; ++i) {
        for (Eigen::Index j = 0; j < n_texts; ++j) scores[j] = similarity(i, j);
        const std::vector<int> order = detail::ranked_order(scores);
        std::vector<double> gains(order.size());
        std::vector<bool> flags(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            gains[k] = static_cast<double>(relevance(i, order[k]));
            flags[k] = relevance(i, order[k]) > map_threshold;
        }
        ndcg_v2t += ndcg_query(gains);
        map_v2t += average_precision(flags);
    }
    ndcg_v2t /= static_cast<double>(n_videos);
    map_v2t /= static_cast<double>(n_videos);

    double ndcg_t2v = 0.0, map_t2v = 0.0;
    scores.resize(static_cast<std::size_t>(n_videos));
    for (Eigen::Index j = 0; j < n_texts; ++j) {
        for (Eigen::Index i = 0; i < n_videos; ++i) scores[i] = similarity(i, j);
        const std::vector<int> order = detail::ranked_order(scores);
        std::vector<double> gains(order.size());
        std::vector<bool> flags(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            gains[k] = static_cast<double>(relevance(order[k], j));
            flags[k] = relevance(order[k], j) > map_threshold;
        }
        ndcg_t2v += ndcg_query(gains);
        map_t2v += average_precision(flags);
    }
    ndcg_t2v /= static_cast<double>(n_texts);
    map_t2v /= static_cast<double>(n_texts);

    MetricReport report;
    report.ndcg_v2t = ndcg_v2t;
    report.ndcg_t2v = ndcg_t2v;
    report.ndcg_avg = 0.5 * (ndcg_v2t + ndcg_t2v);
    report.map_v2t = map_v2t;
    report.map_t2v = map_t2v;
    report.map_avg = 0.5 * (map_v2t + map_t2v);
    return report;
}

}  // namespace rrank
