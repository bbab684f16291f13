#pragma once

// Permutation channel with packet errors, deletions, and insertions.
//
// Two modes. Stochastic: independent per-packet deletion and corruption,
// Poisson insertion count, all events seeded; collisions merge and the
// realized counts record what actually happened to the set. Pattern:
// exactly the requested (t, rho, s) is realized, with corrupted and
// inserted packets resampled away from both the sent set and the current
// received set so the counts are exact.
//
// Realized counts are reconstructed from the sent/received pair so that
// the accounting identities |Y| = |X| - rho + s and
// d(X, Y) = rho + 2t + s hold on every outcome.

#include <cstdint>
#include <vector>

#include "subsetcode/core.hpp"
#include "subsetcode/rng.hpp"

namespace subsetcode {

struct ChannelPattern {
    unsigned t = 0;    // errors
    unsigned rho = 0;  // deletions
    unsigned s = 0;    // insertions
};

enum class ChannelMode { stochastic, pattern };

struct ChannelConfig {
    ChannelMode mode = ChannelMode::stochastic;
    double p_del = 0.0;
    double p_err = 0.0;
    double ins_rate = 0.0;
    ChannelPattern pattern;
    std::uint64_t seed = 0;
};

struct ChannelOutcome {
    SubsetCodeword received;
    ChannelPattern realized;
    /// Uniformly shuffled order for serialization, so downstream order
    /// blindness is exercised rather than assumed.
    std::vector<std::uint64_t> serialization_order;

    bool within_bound(unsigned min_distance) const {
        return 2 * (realized.rho + 2 * realized.t + realized.s) < min_distance;
    }
};

ChannelOutcome transmit(const ChannelConfig& cfg, const SubsetCodeword& sent, Rng& rng);

/// Deterministic per-trial stream: the outcome depends only on
/// (cfg.seed, trial, sent).
ChannelOutcome replay(const ChannelConfig& cfg, const SubsetCodeword& sent,
                      std::uint64_t trial);

}  // namespace subsetcode
