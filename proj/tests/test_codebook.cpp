#include <doctest.h>

#include <random>

#include "pattern_support.hpp"
#include "subsetcode/codebook.hpp"
#include "subsetcode/rs_subset.hpp"

using namespace subsetcode;

TEST_CASE("analyze the toy code") {
    Codebook cb(testsupport::toy_code());
    auto a = analyze(cb);
    CHECK(a.n == 2);
    CHECK(a.count == 4);
    CHECK(a.k_exact);
    CHECK(a.k_bits == doctest::Approx(2.0));
    REQUIRE(a.min_distance.has_value());
    CHECK(*a.min_distance == 2);
    CHECK(a.max_cardinality == 2);
    CHECK(a.constant_cardinality);
    CHECK(a.rate() == Rational(1, 2));
    CHECK(a.str() == "[2,2,2;2], constant-cardinality");
}

TEST_CASE("single-codeword book: distance undefined, k = 0") {
    Codebook cb({SubsetCodeword(3, {1, 2})});
    auto a = analyze(cb);
    CHECK(!a.min_distance.has_value());
    CHECK(a.k_bits == doctest::Approx(0.0));
}

TEST_CASE("analyze matches the analytic RS distance") {
    RsSubsetParams p(FieldSpec(4), 2, 5);
    auto a = analyze(Codebook(rs_materialize(p)));
    REQUIRE(a.min_distance.has_value());
    CHECK(*a.min_distance == p.min_distance());
    CHECK(a.constant_cardinality);
    CHECK(a.max_cardinality == 5);
}

TEST_CASE("codebook validation") {
    CHECK_THROWS_AS(Codebook(std::vector<SubsetCodeword>{}), std::invalid_argument);
    CHECK_THROWS_AS(Codebook({SubsetCodeword(2, {0}), SubsetCodeword(2, {0})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Codebook({SubsetCodeword(2, {0}), SubsetCodeword(3, {0})}),
                    std::invalid_argument);
}

TEST_CASE("md_decode: exact codeword and width mismatch") {
    Codebook cb(testsupport::toy_code());
    auto res = md_decode(cb, cb.codeword(2));
    CHECK(!res.ambiguous());
    CHECK(res.id() == 2);
    CHECK(res.distance == 0);
    CHECK_THROWS_AS(md_decode(cb, SubsetCodeword(5)), std::invalid_argument);
}

TEST_CASE("md_decode: ties are surfaced, not broken") {
    Codebook cb(testsupport::toy_code());
    SubsetCodeword received(2, {0, 3});  // {a, d}
    auto res = md_decode(cb, received);
    CHECK(res.ambiguous());
    CHECK(res.distance == 2);
    // distance 2 to {a,b}, {a,c}, {c,d}; distance 4 to {b,c}
    CHECK(res.minimizers == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("md_decode: unique within the packing radius") {
    // d = 6 code: every received set within distance 1 of a codeword
    // decodes to it uniquely
    RsSubsetParams p(FieldSpec(4), 1, 3);
    Codebook cb(rs_materialize(p));
    auto a = analyze(cb);
    REQUIRE(*a.min_distance == 6);
    for (std::size_t id = 0; id < cb.size(); ++id) {
        const auto& x = cb.codeword(id);
        // all Y with d(X, Y) <= 1: one deletion or one insertion
        std::vector<SubsetCodeword> ball{x};
        for (std::uint64_t v : x) {
            SubsetCodeword y = x;
            y.erase(v);
            ball.push_back(y);
        }
        for (std::uint64_t v = 0; v < x.ambient().universe_size(); ++v) {
            if (x.contains(v)) continue;
            SubsetCodeword y = x;
            y.insert(v);
            ball.push_back(y);
        }
        for (const auto& y : ball) {
            auto res = md_decode(cb, y);
            REQUIRE(!res.ambiguous());
            CHECK(res.id() == id);
        }
    }
}

TEST_CASE("correctability_check") {
    auto r = correctability_check(8, 1, 1, 0);
    CHECK(r.correctable);  // 2*3 < 8

    CHECK(!correctability_check(8, 2, 0, 0).correctable);  // 2*4 = 8, strict

    auto del0 = correctability_check(2, 0, 0, 0);
    CHECK(del0.correctable);
    REQUIRE(del0.deletion_only_ok.has_value());
    CHECK(*del0.deletion_only_ok);
    auto del1 = correctability_check(2, 0, 1, 0);
    CHECK(!del1.correctable);
    CHECK(*del1.deletion_only_radius == 0);
    CHECK(!*del1.deletion_only_ok);

    Codebook single({SubsetCodeword(2, {0})});
    CHECK_THROWS_AS(correctability_check(single, 0, 0, 0), std::domain_error);
}

TEST_CASE("decoding guarantee with realized-pattern distance bound") {
    // toy code (d = 2): only the empty pattern is inside the budget
    Codebook toy(testsupport::toy_code());
    for (std::size_t id = 0; id < toy.size(); ++id) {
        auto res = md_decode(toy, toy.codeword(id));
        CHECK(res.id() == id);
    }

    // d = 6 code: exhaustive over all budget cells, checking both the
    // decode result and the proof's pre-doubling bound d(X,Y) <= rho+2t+s
    RsSubsetParams p(FieldSpec(4), 1, 3);
    Codebook cb(rs_materialize(p));
    for (unsigned t = 0; t <= 1; ++t)
        for (unsigned rho = 0; rho <= 2; ++rho)
            for (unsigned s = 0; s <= 2; ++s) {
                unsigned budget = rho + 2 * t + s;
                if (2 * budget >= 6) continue;
                for (std::size_t id = 0; id < cb.size(); ++id) {
                    const auto& sent = cb.codeword(id);
                    testsupport::for_each_placement(
                        sent, t, rho, s, [&](const SubsetCodeword& received) {
                            CHECK(subset_distance(sent, received) <= budget);
                            auto res = md_decode(cb, received);
                            REQUIRE(!res.ambiguous());
                            CHECK(res.id() == id);
                        });
                }
            }
}
