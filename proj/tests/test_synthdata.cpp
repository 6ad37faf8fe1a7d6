#include <catch2/catch_amalgamated.hpp>

#include "rrank/relevance.hpp"
#include "rrank/synthdata.hpp"

using namespace rrank;

TEST_CASE("generate_dataset is deterministic", "[synthdata]") {
    SynthConfig cfg;
    cfg.n_items = 64;
    const Dataset a = generate_dataset(cfg);
    const Dataset b = generate_dataset(cfg);
    CHECK((a.videos.array() == b.videos.array()).all());
    CHECK((a.texts.array() == b.texts.array()).all());
    REQUIRE(a.annotations.size() == b.annotations.size());
    for (std::size_t i = 0; i < a.annotations.size(); ++i) {
        CHECK(a.annotations[i].id == b.annotations[i].id);
        CHECK(a.annotations[i].verb_classes == b.annotations[i].verb_classes);
        CHECK(a.annotations[i].noun_classes == b.annotations[i].noun_classes);
    }

    SynthConfig other = cfg;
    other.seed = cfg.seed + 1;
    const Dataset c = generate_dataset(other);
    CHECK(!(a.videos.array() == c.videos.array()).all());
}

TEST_CASE("zero noise gives identical rows for identical signatures", "[synthdata]") {
    SynthConfig cfg;
    cfg.n_items = 40;
    cfg.n_verb_classes = 2;
    cfg.n_noun_classes = 3;
    cfg.nouns_per_item = 2;
    cfg.d_video = 12;
    cfg.d_text = 10;
    cfg.noise_sigma = 0.0;
    const Dataset ds = generate_dataset(cfg);

    int matched_pairs = 0;
    for (int i = 0; i < cfg.n_items; ++i)
        for (int j = i + 1; j < cfg.n_items; ++j) {
            const bool same_signature =
                ds.annotations[i].verb_classes == ds.annotations[j].verb_classes &&
                ds.annotations[i].noun_classes == ds.annotations[j].noun_classes;
            if (!same_signature) continue;
            ++matched_pairs;
            CHECK((ds.videos.row(i).array() == ds.videos.row(j).array()).all());
            CHECK((ds.texts.row(i).array() == ds.texts.row(j).array()).all());
        }
    // 2 verbs x 3 noun pairs = 6 signatures over 40 items: collisions certain.
    CHECK(matched_pairs > 0);
}

TEST_CASE("zero-noise items of identical signature are mutually nearest", "[synthdata]") {
    SynthConfig cfg;
    cfg.n_items = 30;
    cfg.n_verb_classes = 2;
    cfg.n_noun_classes = 3;
    cfg.nouns_per_item = 1;
    cfg.d_video = 16;
    cfg.d_text = 16;
    cfg.noise_sigma = 0.0;
    const Dataset ds = generate_dataset(cfg);
    for (int i = 0; i < cfg.n_items; ++i)
        for (int j = 0; j < cfg.n_items; ++j) {
            if (i == j) continue;
            const bool same_signature =
                ds.annotations[i].verb_classes == ds.annotations[j].verb_classes &&
                ds.annotations[i].noun_classes == ds.annotations[j].noun_classes;
            const float dist = (ds.videos.row(i) - ds.videos.row(j)).norm();
            if (same_signature)
                CHECK(dist == 0.0f);
            else
                CHECK(dist > 1e-4f);
        }
}

TEST_CASE("default config produces all three relevance regimes", "[synthdata]") {
    const Dataset ds = generate_dataset(SynthConfig{});
    const MatrixF rel = relevance_matrix(ds.annotations, ds.annotations);
    bool has_zero = false, has_partial = false, has_one_off_diagonal = false;
    for (int i = 0; i < rel.rows(); ++i) {
        CHECK(rel(i, i) == 1.0f);  // matched pairs share annotations
        for (int j = 0; j < rel.cols(); ++j) {
            if (i == j) continue;
            if (rel(i, j) == 0.0f) has_zero = true;
            else if (rel(i, j) == 1.0f) has_one_off_diagonal = true;
            else has_partial = true;
        }
    }
    CHECK(has_zero);
    CHECK(has_partial);
    CHECK(has_one_off_diagonal);
}

TEST_CASE("annotations use the configured class ranges", "[synthdata]") {
    SynthConfig cfg;
    cfg.n_items = 100;
    cfg.n_verb_classes = 4;
    cfg.n_noun_classes = 9;
    cfg.nouns_per_item = 3;
    const Dataset ds = generate_dataset(cfg);
    for (const auto& ann : ds.annotations) {
        REQUIRE(ann.verb_classes.size() == 1);
        CHECK(ann.verb_classes[0] >= 0);
        CHECK(ann.verb_classes[0] < cfg.n_verb_classes);
        REQUIRE(ann.noun_classes.size() == static_cast<std::size_t>(cfg.nouns_per_item));
        for (std::size_t k = 1; k < ann.noun_classes.size(); ++k)
            CHECK(ann.noun_classes[k - 1] < ann.noun_classes[k]);  // sorted, distinct
        for (int m : ann.noun_classes) {
            CHECK(m >= 0);
            CHECK(m < cfg.n_noun_classes);
        }
    }
}

TEST_CASE("generate_dataset validates its config", "[synthdata]") {
    SynthConfig bad;
    bad.nouns_per_item = 30;
    bad.n_noun_classes = 20;
    CHECK_THROWS_AS(generate_dataset(bad), std::invalid_argument);

    SynthConfig neg;
    neg.noise_sigma = -0.5;
    CHECK_THROWS_AS(generate_dataset(neg), std::invalid_argument);

    SynthConfig zero;
    zero.n_items = 0;
    CHECK_THROWS_AS(generate_dataset(zero), std::invalid_argument);
}
