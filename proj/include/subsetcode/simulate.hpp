#pragma once

// Monte Carlo harness: encode -> channel -> decode per trial, with one
// independent random stream per trial index. Output is identical for any
// thread count; rows are ordered by trial index.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "subsetcode/channel.hpp"
#include "subsetcode/rs_subset.hpp"

namespace subsetcode {

struct SimRow {
    std::uint64_t trial;
    unsigned t_real;
    unsigned rho_real;
    unsigned s_real;
    bool within_bound;
    bool decode_ok;
    unsigned dist;  // subset_distance(sent, received)
};

struct SimSummary {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t within_bound_trials = 0;
    std::uint64_t failures_within_bound = 0;
    double mean_t = 0, mean_rho = 0, mean_s = 0;

    double failure_rate() const {
        return trials ? static_cast<double>(failures) / trials : 0.0;
    }
    double failure_rate_within_bound() const {
        return within_bound_trials
                   ? static_cast<double>(failures_within_bound) / within_bound_trials
                   : 0.0;
    }
};

struct SimReport {
    std::vector<SimRow> rows;
    SimSummary summary;
};

/// Each trial draws a fresh random message from its own stream, sends it
/// through the channel, and decodes with the structured RS decoder.
SimReport run_simulation(const RsSubsetParams& params, const ChannelConfig& cfg,
                         std::uint64_t trials, unsigned threads = 1);

/// CSV columns: trial,t_real,rho_real,s_real,within_bound,decode_ok,dist
void write_sim_csv(std::ostream& out, const SimReport& report);
void write_sim_summary(std::ostream& out, const SimSummary& summary);

}  // namespace subsetcode
