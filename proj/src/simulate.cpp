#include "subsetcode/simulate.hpp"

#include <ostream>
#include <thread>

namespace subsetcode {

namespace {

SimRow run_trial(const RsSubsetParams& params, const ChannelConfig& cfg,
                 std::uint64_t trial) {
    Rng rng = Rng::for_trial(cfg.seed, trial);
    RsMessage msg(params.k);
    for (auto& p : msg) p = static_cast<std::uint32_t>(rng.uniform_below(params.field.order()));
    SubsetCodeword sent = rs_encode(params, msg);
    ChannelOutcome outcome = transmit(cfg, sent, rng);
    RsDecodeResult dec = rs_decode(params, outcome.received);
    bool ok = dec.ok() && *dec.message == msg;
    return SimRow{trial,
                  outcome.realized.t,
                  outcome.realized.rho,
                  outcome.realized.s,
                  outcome.within_bound(params.min_distance()),
                  ok,
                  static_cast<unsigned>(subset_distance(sent, outcome.received))};
}

}  // namespace

SimReport run_simulation(const RsSubsetParams& params, const ChannelConfig& cfg,
                         std::uint64_t trials, unsigned threads) {
    if (trials < 1) throw std::invalid_argument("run_simulation: trials must be >= 1");
    if (threads < 1) threads = 1;
    SimReport report;
    report.rows.resize(trials);
    if (threads == 1) {
        for (std::uint64_t i = 0; i < trials; ++i)
            report.rows[i] = run_trial(params, cfg, i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t i = w; i < trials; i += threads)
                    report.rows[i] = run_trial(params, cfg, i);
            });
        }
        for (auto& th : pool) th.join();
    }
    SimSummary& s = report.summary;
    s.trials = trials;
    for (const auto& row : report.rows) {
        if (!row.decode_ok) ++s.failures;
        if (row.within_bound) {
            ++s.within_bound_trials;
            if (!row.decode_ok) ++s.failures_within_bound;
        }
        s.mean_t += row.t_real;
        s.mean_rho += row.rho_real;
        s.mean_s += row.s_real;
    }
    s.mean_t /= trials;
    s.mean_rho /= trials;
    s.mean_s /= trials;
    return report;
}

void write_sim_csv(std::ostream& out, const SimReport& report) {
    out << "trial,t_real,rho_real,s_real,within_bound,decode_ok,dist\n";
    for (const auto& r : report.rows)
        out << r.trial << ',' << r.t_real << ',' << r.rho_real << ',' << r.s_real << ','
            << (r.within_bound ? 1 : 0) << ',' << (r.decode_ok ? 1 : 0) << ',' << r.dist
            << "\n";
}

void write_sim_summary(std::ostream& out, const SimSummary& s) {
    out << "trials=" << s.trials << "\n"
        << "failures=" << s.failures << "\n"
        << "failure_rate=" << s.failure_rate() << "\n"
        << "within_bound_trials=" << s.within_bound_trials << "\n"
        << "failures_within_bound=" << s.failures_within_bound << "\n"
        << "failure_rate_within_bound=" << s.failure_rate_within_bound() << "\n"
        << "mean_t=" << s.mean_t << "\n"
        << "mean_rho=" << s.mean_rho << "\n"
        << "mean_s=" << s.mean_s << "\n";
}

}  // namespace subsetcode
