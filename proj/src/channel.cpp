#include "subsetcode/channel.hpp"

#include <algorithm>

namespace subsetcode {

namespace {

// Uniform packet not in either forbidden set. Rejection sampling with a
// deterministic fallback scan when the universe is nearly full.
std::uint64_t sample_outside(Rng& rng, const AmbientSpec& amb, const SubsetCodeword& a,
                             const SubsetCodeword& b) {
    std::uint64_t universe = amb.universe_size();
    for (int tries = 0; tries < 256; ++tries) {
        std::uint64_t v = rng.uniform_below(universe);
        if (!a.contains(v) && !b.contains(v)) return v;
    }
    std::uint64_t start = rng.uniform_below(universe);
    for (std::uint64_t off = 0; off < universe; ++off) {
        std::uint64_t v = (start + off) % universe;
        if (!a.contains(v) && !b.contains(v)) return v;
    }
    throw std::invalid_argument("channel: ambient set exhausted, no free packet left");
}

// Realized counts from the sent/received pair: lost originals and alien
// arrivals, with up to t_nominal of them paired up as errors.
ChannelPattern realize_counts(const SubsetCodeword& sent, const SubsetCodeword& received,
                              unsigned t_nominal) {
    std::size_t common = intersection_size(sent, received);
    unsigned lost = static_cast<unsigned>(sent.size() - common);
    unsigned alien = static_cast<unsigned>(received.size() - common);
    unsigned t = std::min({t_nominal, lost, alien});
    return ChannelPattern{t, lost - t, alien - t};
}

ChannelOutcome stochastic_transmit(const ChannelConfig& cfg, const SubsetCodeword& sent,
                                   Rng& rng) {
    const AmbientSpec amb = sent.ambient();
    SubsetCodeword received(amb);
    unsigned t_events = 0;
    for (std::uint64_t pkt : sent) {
        if (rng.bernoulli(cfg.p_del)) continue;
        if (rng.bernoulli(cfg.p_err)) {
            ++t_events;
            std::uint64_t corrupted;
            do {
                corrupted = rng.uniform_below(amb.universe_size());
            } while (corrupted == pkt);
            received.insert(corrupted);
        } else {
            received.insert(pkt);
        }
    }
    unsigned insertions = rng.poisson(cfg.ins_rate);
    std::uint64_t room = amb.universe_size() - received.size();
    if (insertions > room) insertions = static_cast<unsigned>(room);
    for (unsigned i = 0; i < insertions; ++i)
        received.insert(rng.uniform_below(amb.universe_size()));
    ChannelOutcome out{received, realize_counts(sent, received, t_events), {}};
    return out;
}

ChannelOutcome pattern_transmit(const ChannelConfig& cfg, const SubsetCodeword& sent,
                                Rng& rng) {
    const ChannelPattern& p = cfg.pattern;
    const AmbientSpec amb = sent.ambient();
    if (p.t + p.rho > sent.size())
        throw std::invalid_argument("channel pattern infeasible: t + rho > |X|");
    if (sent.size() + p.s > amb.universe_size() ||
        p.s + p.t > amb.universe_size() - sent.size())
        throw std::invalid_argument("channel pattern infeasible: not enough free packets");

    std::vector<std::uint64_t> packets(sent.begin(), sent.end());
    // choose rho + t distinct victims: first rho deleted, next t corrupted
    for (std::size_t i = 0; i < p.rho + p.t && i < packets.size(); ++i) {
        std::size_t j = i + rng.uniform_below(packets.size() - i);
        std::swap(packets[i], packets[j]);
    }
    SubsetCodeword received(amb);
    for (std::size_t i = p.rho + p.t; i < packets.size(); ++i) received.insert(packets[i]);
    // corrupted and inserted packets avoid sent and current alike, so the
    // requested counts are exactly the realized ones
    for (unsigned i = 0; i < p.t; ++i) received.insert(sample_outside(rng, amb, sent, received));
    for (unsigned i = 0; i < p.s; ++i) received.insert(sample_outside(rng, amb, sent, received));
    ChannelOutcome out{received, realize_counts(sent, received, p.t), {}};
    return out;
}

}  // namespace

ChannelOutcome transmit(const ChannelConfig& cfg, const SubsetCodeword& sent, Rng& rng) {
    if (sent.empty())
        throw std::invalid_argument("channel: sent codeword must be nonempty");
    if (cfg.p_del < 0 || cfg.p_del > 1 || cfg.p_err < 0 || cfg.p_err > 1)
        throw std::invalid_argument("channel: probabilities must be in [0, 1]");
    if (cfg.ins_rate < 0)
        throw std::invalid_argument("channel: insertion rate must be non-negative");
    ChannelOutcome out = cfg.mode == ChannelMode::stochastic
                             ? stochastic_transmit(cfg, sent, rng)
                             : pattern_transmit(cfg, sent, rng);
    out.serialization_order.assign(out.received.begin(), out.received.end());
    for (std::size_t i = out.serialization_order.size(); i > 1; --i)
        std::swap(out.serialization_order[i - 1],
                  out.serialization_order[rng.uniform_below(i)]);
    return out;
}

ChannelOutcome replay(const ChannelConfig& cfg, const SubsetCodeword& sent,
                      std::uint64_t trial) {
    Rng rng = Rng::for_trial(cfg.seed, trial);
    return transmit(cfg, sent, rng);
}

}  // namespace subsetcode
