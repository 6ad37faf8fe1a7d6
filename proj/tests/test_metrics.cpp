#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "rrank/metrics.hpp"
#include "rrank/random.hpp"

#include "oracles.hpp"

using namespace rrank;

namespace {

MatrixF random_matrix(Rng& rng, int rows, int cols, float lo, float hi) {
    MatrixF m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<float>(rng.uniform(lo, hi));
    return m;
}

void check_close(const MetricReport& a, const MetricReport& b, double tol) {
    CHECK(std::abs(a.ndcg_v2t - b.ndcg_v2t) <= tol);
    CHECK(std::abs(a.ndcg_t2v - b.ndcg_t2v) <= tol);
    CHECK(std::abs(a.ndcg_avg - b.ndcg_avg) <= tol);
    CHECK(std::abs(a.map_v2t - b.map_v2t) <= tol);
    CHECK(std::abs(a.map_t2v - b.map_t2v) <= tol);
    CHECK(std::abs(a.map_avg - b.map_avg) <= tol);
}

}  // namespace

TEST_CASE("ndcg_query worked examples", "[metrics]") {
    const std::vector<double> ideal = {1.0, 0.5, 0.0};
    CHECK(ndcg_query(ideal) == 1.0);

    const std::vector<double> reversed = {0.0, 0.5, 1.0};
    CHECK(ndcg_query(reversed) == Catch::Approx(0.61990).margin(1e-5));

    const std::vector<double> flat = {0.3, 0.3, 0.3, 0.3};
    CHECK(ndcg_query(flat) == 1.0);

    const std::vector<double> zeros = {0.0, 0.0};
    CHECK(ndcg_query(zeros) == 0.0);

    CHECK_THROWS_AS(ndcg_query(std::span<const double>{}), std::invalid_argument);
}

TEST_CASE("average_precision worked examples", "[metrics]") {
    CHECK(average_precision({true, true, false}) == 1.0);
    CHECK(average_precision({false, true, true}) == Catch::Approx(0.58333).margin(1e-5));
    CHECK(average_precision({false, false, false}) == 0.0);
    CHECK_THROWS_AS(average_precision({}), std::invalid_argument);
}

TEST_CASE("nDCG is 1 exactly when gains are non-increasing", "[metrics][property]") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(20));
        std::vector<double> gains(n);
        for (double& g : gains) g = rng.uniform();
        std::sort(gains.begin(), gains.end(), std::greater<double>());
        CHECK(ndcg_query(gains) == Catch::Approx(1.0).margin(1e-12));

        // Swap two distinct-value positions; the score must drop.
        std::vector<double> swapped = gains;
        if (swapped.front() != swapped.back()) {
            std::swap(swapped.front(), swapped.back());
            CHECK(ndcg_query(swapped) < 1.0);
        }
    }
}

TEST_CASE("evaluate_retrieval on perfect and adversarial rankings", "[metrics]") {
    MatrixF sim(2, 2), rel(2, 2);
    sim << 0.9f, 0.1f, 0.2f, 0.8f;
    rel << 1.0f, 0.0f, 0.0f, 1.0f;
    const MetricReport perfect = evaluate_retrieval(sim, rel, 0.0);
    CHECK(perfect.ndcg_v2t == 1.0);
    CHECK(perfect.ndcg_t2v == 1.0);
    CHECK(perfect.ndcg_avg == 1.0);
    CHECK(perfect.map_v2t == 1.0);
    CHECK(perfect.map_t2v == 1.0);
    CHECK(perfect.map_avg == 1.0);

    // Similarity = -relevance ranks the best item last.
    MatrixF rel_row(1, 3), sim_row(1, 3);
    rel_row << 1.0f, 0.5f, 0.0f;
    sim_row = -rel_row;
    const MetricReport adv = evaluate_retrieval(sim_row, rel_row, 0.0);
    CHECK(adv.ndcg_v2t == Catch::Approx(0.61990).margin(1e-5));

    CHECK_THROWS_AS(evaluate_retrieval(sim, rel_row, 0.0), std::invalid_argument);
}

TEST_CASE("evaluate_retrieval report invariants", "[metrics]") {
    Rng rng(88);
    const MatrixF sim = random_matrix(rng, 12, 9, -1.0f, 1.0f);
    const MatrixF rel = random_matrix(rng, 12, 9, 0.0f, 1.0f);
    const MetricReport r = evaluate_retrieval(sim, rel, 0.3);
    CHECK(r.ndcg_avg == 0.5 * (r.ndcg_v2t + r.ndcg_t2v));
    CHECK(r.map_avg == 0.5 * (r.map_v2t + r.map_t2v));
    for (double v : {r.ndcg_v2t, r.ndcg_t2v, r.ndcg_avg, r.map_v2t, r.map_t2v, r.map_avg}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("evaluate_retrieval matches the brute-force oracle", "[metrics][oracle]") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const int n_videos = 1 + static_cast<int>(rng.below(30));
        const int n_texts = 1 + static_cast<int>(rng.below(30));
        MatrixF sim = random_matrix(rng, n_videos, n_texts, -1.0f, 1.0f);
        const MatrixF rel = random_matrix(rng, n_videos, n_texts, 0.0f, 1.0f);
        // Exercise tie-breaking on some instances.
        if (trial % 5 == 0)
            for (int i = 0; i < n_videos; ++i)
                for (int j = 0; j < n_texts; ++j)
                    sim(i, j) = std::round(sim(i, j) * 8.0f) / 8.0f;
        const double thr = (trial % 2 == 0) ? 0.0 : 0.4;
        check_close(evaluate_retrieval(sim, rel, thr),
                    oracles::evaluate_retrieval(sim, rel, thr), 1e-9);
    }
}

TEST_CASE("report is invariant under joint row permutation", "[metrics][property]") {
    Rng rng(31337);
    const int n = 10;
    const MatrixF sim = random_matrix(rng, n, n, -1.0f, 1.0f);
    const MatrixF rel = random_matrix(rng, n, n, 0.0f, 1.0f);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    MatrixF sim_p(n, n), rel_p(n, n);
    for (int i = 0; i < n; ++i) {
        sim_p.row(i) = sim.row(perm[i]);
        rel_p.row(i) = rel.row(perm[i]);
    }
    check_close(evaluate_retrieval(sim, rel, 0.0), evaluate_retrieval(sim_p, rel_p, 0.0),
                1e-12);
}

TEST_CASE("report depends only on the similarity order", "[metrics][property]") {
    Rng rng(5150);
    const MatrixF sim = random_matrix(rng, 8, 11, -1.0f, 1.0f);
    const MatrixF rel = random_matrix(rng, 8, 11, 0.0f, 1.0f);
    MatrixF transformed = sim;
    for (int i = 0; i < sim.rows(); ++i)
        for (int j = 0; j < sim.cols(); ++j)
            transformed(i, j) = 0.5f * sim(i, j) + 0.25f;  // strictly increasing
    const MetricReport a = evaluate_retrieval(sim, rel, 0.0);
    const MetricReport b = evaluate_retrieval(transformed, rel, 0.0);
    CHECK(a.ndcg_v2t == b.ndcg_v2t);
    CHECK(a.ndcg_t2v == b.ndcg_t2v);
    CHECK(a.map_v2t == b.map_v2t);
    CHECK(a.map_t2v == b.map_t2v);
}
