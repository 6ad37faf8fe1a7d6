#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "rrank/ensemble.hpp"
#include "rrank/random.hpp"

#include "oracles.hpp"

using namespace rrank;

namespace {
MatrixF random_sim(Rng& rng, int rows, int cols) {
    MatrixF m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = static_cast<float>(rng.uniform(-1.0, 1.0));
    return m;
}
}  // namespace

TEST_CASE("ensemble_mean of two complementary matrices", "[ensemble]") {
    MatrixF a(2, 2), b(2, 2);
    a << 1.0f, 0.0f, 0.0f, 1.0f;
    b << 0.0f, 1.0f, 1.0f, 0.0f;
    const MatrixF mean = ensemble_mean({a, b});
    CHECK((mean.array() == 0.5f).all());
}

TEST_CASE("ensemble_mean of identical inputs is exact", "[ensemble]") {
    Rng rng(17);
    const MatrixF m = random_sim(rng, 5, 7);
    for (int copies : {2, 3, 5, 7}) {
        const MatrixF mean = ensemble_mean(std::vector<MatrixF>(copies, m));
        CHECK((mean.array() == m.array()).all());
    }
}

TEST_CASE("ensemble_mean matches the scalar-loop oracle", "[ensemble][oracle]") {
    Rng rng(23);
    std::vector<MatrixF> inputs;
    for (int k = 0; k < 5; ++k) inputs.push_back(random_sim(rng, 6, 9));
    const MatrixF mean = ensemble_mean(inputs);
    const MatrixF expected = oracles::ensemble_mean(inputs);
    for (int i = 0; i < mean.rows(); ++i)
        for (int j = 0; j < mean.cols(); ++j)
            CHECK(std::abs(mean(i, j) - expected(i, j)) <= 1e-7f);
}

TEST_CASE("ensemble_mean is invariant under model order", "[ensemble][property]") {
    Rng rng(29);
    std::vector<MatrixF> inputs;
    for (int k = 0; k < 6; ++k) inputs.push_back(random_sim(rng, 4, 4));
    const MatrixF base = ensemble_mean(inputs);
    for (int trial = 0; trial < 5; ++trial) {
        rng.shuffle(inputs);
        const MatrixF shuffled = ensemble_mean(inputs);
        CHECK((shuffled.array() == base.array()).all());  // exact
    }
}

TEST_CASE("ensemble_mean stays within the elementwise envelope", "[ensemble][property]") {
    Rng rng(37);
    std::vector<MatrixF> inputs;
    for (int k = 0; k < 4; ++k) inputs.push_back(random_sim(rng, 8, 3));
    const MatrixF mean = ensemble_mean(inputs);
    for (int i = 0; i < mean.rows(); ++i)
        for (int j = 0; j < mean.cols(); ++j) {
            float lo = inputs[0](i, j), hi = inputs[0](i, j);
            for (const auto& m : inputs) {
                lo = std::min(lo, m(i, j));
                hi = std::max(hi, m(i, j));
            }
            CHECK(mean(i, j) >= lo);
            CHECK(mean(i, j) <= hi);
        }
}

TEST_CASE("ensemble_mean commutes with a constant shift", "[ensemble][property]") {
    Rng rng(41);
    std::vector<MatrixF> inputs;
    for (int k = 0; k < 3; ++k) inputs.push_back(random_sim(rng, 5, 5));
    const float c = 0.125f;  // exactly representable shift
    std::vector<MatrixF> shifted;
    for (const auto& m : inputs) shifted.push_back(m.array() + c);
    const MatrixF a = ensemble_mean(shifted);
    const MatrixF b = ensemble_mean(inputs);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            CHECK(a(i, j) == Catch::Approx(b(i, j) + c).margin(1e-6));
}

TEST_CASE("ensemble_mean rejects bad input", "[ensemble]") {
    CHECK_THROWS_AS(ensemble_mean({}), std::invalid_argument);

    Rng rng(43);
    const MatrixF a = random_sim(rng, 3, 3);
    const MatrixF b = random_sim(rng, 3, 4);
    try {
        ensemble_mean({a, a, b});
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("matrix 2") != std::string::npos);
    }
}
