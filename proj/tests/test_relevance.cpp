#include <catch2/catch_amalgamated.hpp>

#include "rrank/relevance.hpp"

#include "oracles.hpp"

using namespace rrank;

namespace {
CaptionAnnotation ann(std::string id, std::vector<int> verbs, std::vector<int> nouns) {
    return CaptionAnnotation{std::move(id), std::move(verbs), std::move(nouns)};
}
}  // namespace

TEST_CASE("parse_annotations reads well-formed rows", "[relevance][parse]") {
    const auto anns = parse_annotations("id,verb_class,noun_classes\nc001,3,7 9");
    REQUIRE(anns.size() == 1);
    CHECK(anns[0].id == "c001");
    CHECK(anns[0].verb_classes == std::vector<int>{3});
    CHECK(anns[0].noun_classes == std::vector<int>{7, 9});
}

TEST_CASE("parse_annotations keeps row order and accepts multiple verbs", "[relevance][parse]") {
    const auto anns = parse_annotations(
        "id,verb_class,noun_classes\nb,4 2,1\na,0,5 5 3\n");
    REQUIRE(anns.size() == 2);
    CHECK(anns[0].id == "b");
    CHECK(anns[0].verb_classes == std::vector<int>{2, 4});  // sorted
    CHECK(anns[1].id == "a");
    CHECK(anns[1].noun_classes == std::vector<int>{3, 5});  // deduped
}

TEST_CASE("parse_annotations rejects malformed input with line numbers", "[relevance][parse]") {
    SECTION("duplicate id") {
        try {
            parse_annotations("id,verb_class,noun_classes\nc001,3,7\nc001,4,8");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find("duplicate id") != std::string::npos);
        }
    }
    SECTION("non-integer token") {
        try {
            parse_annotations("id,verb_class,noun_classes\nc002,x,7");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SECTION("empty class field") {
        CHECK_THROWS_AS(parse_annotations("id,verb_class,noun_classes\nc003,3,"), ParseError);
        CHECK_THROWS_AS(parse_annotations("id,verb_class,noun_classes\nc003,,7"), ParseError);
    }
    SECTION("missing header") {
        CHECK_THROWS_AS(parse_annotations("c001,3,7"), ParseError);
        CHECK_THROWS_AS(parse_annotations(""), ParseError);
    }
    SECTION("negative class id") {
        CHECK_THROWS_AS(parse_annotations("id,verb_class,noun_classes\nc004,-1,7"), ParseError);
    }
    SECTION("wrong field count") {
        CHECK_THROWS_AS(parse_annotations("id,verb_class,noun_classes\nc005,3"), ParseError);
        CHECK_THROWS_AS(parse_annotations("id,verb_class,noun_classes\nc005,3,7,9"), ParseError);
    }
}

TEST_CASE("annotations survive a CSV round trip", "[relevance][parse]") {
    Rng rng(99);
    std::vector<CaptionAnnotation> anns;
    for (int i = 0; i < 50; ++i) anns.push_back(oracles::random_annotation(rng, i));
    const auto parsed = parse_annotations(format_annotations_csv(anns));
    REQUIRE(parsed.size() == anns.size());
    for (std::size_t i = 0; i < anns.size(); ++i) {
        CHECK(parsed[i].id == anns[i].id);
        CHECK(parsed[i].verb_classes == anns[i].verb_classes);
        CHECK(parsed[i].noun_classes == anns[i].noun_classes);
    }
}

TEST_CASE("relevance on the worked examples", "[relevance]") {
    const auto a = ann("a", {3}, {7, 9});
    CHECK(relevance(a, ann("b", {3}, {7, 9})) == 1.0);
    CHECK(relevance(ann("a", {1}, {2}), ann("b", {5}, {8})) == 0.0);
    // 0.5 * (1 + 1/3)
    CHECK(relevance(a, ann("b", {3}, {9, 12})) == Catch::Approx(0.666667).margin(1e-6));
    CHECK(relevance(ann("a", {1}, {2}), ann("b", {5}, {2}), RelevanceMode::VerbFixedToOne) ==
          1.0);
    // NounFixedToOne keeps the verb IoU only.
    CHECK(relevance(ann("a", {3}, {7}), ann("b", {4}, {7}), RelevanceMode::NounFixedToOne) ==
          0.5);
}

TEST_CASE("relevance_matrix matches pointwise relevance", "[relevance]") {
    const auto a = ann("a", {3}, {7, 9});
    const auto b = ann("b", {3}, {9, 12});

    const MatrixF self = relevance_matrix({a}, {a});
    REQUIRE(self.rows() == 1);
    CHECK(self(0, 0) == 1.0f);

    const MatrixF pair = relevance_matrix({a, b}, {a, b});
    CHECK(pair(0, 1) == Catch::Approx(0.666667).margin(1e-6));
    CHECK(pair(1, 0) == pair(0, 1));

    const std::vector<CaptionAnnotation> disjoint_items = {ann("a", {1}, {2}),
                                                           ann("b", {5}, {8})};
    const MatrixF disjoint = relevance_matrix(disjoint_items, disjoint_items);
    CHECK(disjoint(0, 0) == 1.0f);
    CHECK(disjoint(0, 1) == 0.0f);
    CHECK(disjoint(1, 0) == 0.0f);
    CHECK(disjoint(1, 1) == 1.0f);

    CHECK_THROWS_AS(relevance_matrix({}, {a}), std::invalid_argument);
}

TEST_CASE("relevance properties over random annotations", "[relevance][property]") {
    Rng rng(4242);
    const RelevanceMode modes[] = {RelevanceMode::Full, RelevanceMode::VerbFixedToOne,
                                   RelevanceMode::NounFixedToOne};
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = oracles::random_annotation(rng, 2 * trial);
        const auto b = oracles::random_annotation(rng, 2 * trial + 1);
        for (RelevanceMode mode : modes) {
            const double r_ab = relevance(a, b, mode);
            CHECK(r_ab == relevance(b, a, mode));  // symmetry, exact
            CHECK(r_ab >= 0.0);
            CHECK(r_ab <= 1.0);
            CHECK(relevance(a, a, mode) == 1.0);  // identity
            if (mode != RelevanceMode::Full) CHECK(r_ab >= 0.5);
        }
        // Full mode against the membership-counting oracle.
        const double expected = 0.5 * (oracles::set_iou(a.verb_classes, b.verb_classes) +
                                       oracles::set_iou(a.noun_classes, b.noun_classes));
        CHECK(relevance(a, b) == Catch::Approx(expected).margin(1e-12));
    }
}

TEST_CASE("relevance_matrix entries equal pointwise calls exactly", "[relevance][property]") {
    Rng rng(515);
    std::vector<CaptionAnnotation> items_a, items_b;
    for (int i = 0; i < 10; ++i) items_a.push_back(oracles::random_annotation(rng, i));
    for (int i = 0; i < 10; ++i) items_b.push_back(oracles::random_annotation(rng, 100 + i));
    const MatrixF m = relevance_matrix(items_a, items_b);
    for (int trial = 0; trial < 100; ++trial) {
        const int i = static_cast<int>(rng.below(items_a.size()));
        const int j = static_cast<int>(rng.below(items_b.size()));
        CHECK(m(i, j) == static_cast<float>(relevance(items_a[i], items_b[j])));
    }
}
