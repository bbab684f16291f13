#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "subsetcode/channel.hpp"
#include "subsetcode/rs_subset.hpp"

using namespace subsetcode;

namespace {

SubsetCodeword sample_codeword(unsigned n, std::initializer_list<std::uint64_t> elems) {
    return SubsetCodeword(n, elems);
}

ChannelConfig pattern_cfg(unsigned t, unsigned rho, unsigned s, std::uint64_t seed = 1) {
    ChannelConfig cfg;
    cfg.mode = ChannelMode::pattern;
    cfg.pattern = {t, rho, s};
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST_CASE("pattern (0,0,0) is a pure permutation") {
    auto sent = sample_codeword(6, {1, 9, 17, 33});
    auto out = replay(pattern_cfg(0, 0, 0), sent, 0);
    CHECK(out.received == sent);
    CHECK(out.realized.t == 0);
    CHECK(out.realized.rho == 0);
    CHECK(out.realized.s == 0);
    // serialization order is a shuffle of the same elements
    auto order = out.serialization_order;
    std::sort(order.begin(), order.end());
    CHECK(std::equal(order.begin(), order.end(), sent.begin()));
}

TEST_CASE("deletions-only pattern leaves a subset of the input") {
    auto sent = sample_codeword(6, {1, 9, 17, 33, 40});
    for (unsigned rho = 0; rho <= 5; ++rho) {
        auto out = replay(pattern_cfg(0, rho, 0), sent, rho);
        CHECK(out.received.size() == sent.size() - rho);
        for (std::uint64_t v : out.received) CHECK(sent.contains(v));
        CHECK(out.realized.rho == rho);
    }
}

TEST_CASE("pattern mode realizes exact counts and the distance bound") {
    RsSubsetParams p(FieldSpec(4), 2, 5);
    auto sent = rs_encode(p, {0x7, 0xd});
    for (unsigned t = 0; t <= 2; ++t)
        for (unsigned rho = 0; rho <= 3; ++rho)
            for (unsigned s = 0; s <= 3; ++s)
                for (std::uint64_t trial = 0; trial < 20; ++trial) {
                    auto out = replay(pattern_cfg(t, rho, s, 99), sent, trial);
                    CHECK(out.realized.t == t);
                    CHECK(out.realized.rho == rho);
                    CHECK(out.realized.s == s);
                    CHECK(subset_distance(sent, out.received) == rho + 2 * t + s);
                    CHECK(out.received.size() == sent.size() - rho + s);
                }
}

TEST_CASE("infeasible patterns are rejected") {
    auto sent = sample_codeword(3, {0, 1, 2, 3});
    CHECK_THROWS_AS(replay(pattern_cfg(2, 3, 0), sent, 0), std::invalid_argument);
    // universe has 8 packets, 4 free; t + s = 5 cannot avoid collisions
    CHECK_THROWS_AS(replay(pattern_cfg(2, 0, 3), sent, 0), std::invalid_argument);
    ChannelConfig cfg;
    CHECK_THROWS_AS(replay(cfg, SubsetCodeword(3), 0), std::invalid_argument);  // empty X
    cfg.p_del = 1.5;
    CHECK_THROWS_AS(replay(cfg, sent, 0), std::invalid_argument);
}

TEST_CASE("replay is deterministic and streams are separated") {
    RsSubsetParams p(FieldSpec(4), 2, 5);
    auto sent = rs_encode(p, {0x2, 0xa});
    ChannelConfig cfg;
    cfg.p_del = 0.3;
    cfg.p_err = 0.2;
    cfg.ins_rate = 1.0;
    cfg.seed = 42;
    auto a = replay(cfg, sent, 7);
    auto b = replay(cfg, sent, 7);
    CHECK(a.received == b.received);
    CHECK(a.serialization_order == b.serialization_order);

    int identical = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial)
        if (replay(cfg, sent, trial).received == replay(cfg, sent, trial + 1).received)
            ++identical;
    CHECK(identical < 50);  // distinct trials look independent
}

TEST_CASE("stochastic outcomes satisfy the set-cardinality bookkeeping") {
    RsSubsetParams p(FieldSpec(4), 2, 10);
    auto sent = rs_encode(p, {0x5, 0x9});
    ChannelConfig cfg;
    cfg.p_del = 0.2;
    cfg.p_err = 0.1;
    cfg.ins_rate = 0.7;
    cfg.seed = 2024;
    for (std::uint64_t trial = 0; trial < 2000; ++trial) {
        auto out = replay(cfg, sent, trial);
        auto& r = out.realized;
        std::size_t common = intersection_size(sent, out.received);
        CHECK(common >= sent.size() - r.rho - r.t);
        CHECK(out.received.size() <= sent.size() - r.rho + r.s);
        CHECK(subset_distance(sent, out.received) <= r.rho + 2 * r.t + r.s);
    }
}

TEST_CASE("stochastic deletion count matches the binomial mean") {
    RsSubsetParams p(FieldSpec(4), 2, 10);  // l = 10 packets
    auto sent = rs_encode(p, {0xb, 0x3});
    ChannelConfig cfg;
    cfg.p_del = 0.1;
    cfg.seed = 77;
    const int trials = 10000;
    double sum = 0;
    for (int trial = 0; trial < trials; ++trial)
        sum += replay(cfg, sent, trial).realized.rho;
    double mean = sum / trials;
    // Binomial(10, 0.1): mean 1.0, sd sqrt(0.9); three standard errors
    double se = std::sqrt(10 * 0.1 * 0.9 / trials);
    CHECK(std::abs(mean - 1.0) <= 3 * se);
}

TEST_CASE("within_bound uses the doubled budget") {
    ChannelOutcome out{SubsetCodeword(4), {1, 1, 0}, {}};
    CHECK(out.within_bound(8));   // 2*(1+2+0) = 6 < 8
    CHECK(!out.within_bound(6));  // 6 is not < 6
}
