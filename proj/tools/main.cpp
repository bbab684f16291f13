// Command-line toolkit for subset codes over the packet permutation
// channel: RS-with-sequence-numbers encode/decode, channel application,
// Monte Carlo simulation, codebook analysis, and the binary-code
// conversion.
//
// Exit codes: 0 success, 1 usage or validation error, 2 decode failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "subsetcode/io.hpp"
#include "subsetcode/isometry.hpp"
#include "subsetcode/rs_subset.hpp"
#include "subsetcode/simulate.hpp"

using namespace subsetcode;

namespace {

struct RsFlags {
    unsigned m = 0, k = 0, l = 0;
    std::uint32_t poly = 0;

    RsSubsetParams params() const {
        return RsSubsetParams(FieldSpec(m, poly), k, l);
    }
};

void add_rs_flags(CLI::App* cmd, RsFlags& f) {
    cmd->add_option("--m", f.m, "information packet length in bits")->required();
    cmd->add_option("--k", f.k, "number of information packets")->required();
    cmd->add_option("--l", f.l, "number of coded packets")->required();
    cmd->add_option("--poly", f.poly, "reduction polynomial (default: shipped primitive)");
}

RsMessage parse_message_hex(const RsSubsetParams& p, const std::string& hex) {
    unsigned bits = p.info_bits();
    if (bits > 64)
        throw std::invalid_argument("message longer than 64 bits not supported by the CLI");
    std::uint64_t index = packet_from_hex(hex, bits);
    return rs_message_from_index(p, index);
}

std::string message_to_hex(const RsSubsetParams& p, const RsMessage& msg) {
    return packet_to_hex(rs_message_to_index(p, msg), p.info_bits());
}

std::ostream& out_stream(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

int cmd_encode(const RsFlags& flags, const std::string& msg_hex, const std::string& out_path) {
    auto params = flags.params();
    SubsetCodeword cw = rs_encode(params, parse_message_hex(params, msg_hex));
    std::ofstream file;
    write_codeword(out_stream(file, out_path), cw);
    return 0;
}

int cmd_decode(const RsFlags& flags, const std::string& in_path) {
    auto params = flags.params();
    SubsetCodeword received = read_codeword_file(in_path);
    RsDecodeResult res = rs_decode(params, received);
    if (!res.ok()) {
        std::cerr << "decode failure: " << res.reason << " (discarded=" << res.discarded
                  << " conflicts=" << res.conflicts << " erasures=" << res.erasures << ")\n";
        return 2;
    }
    std::cout << message_to_hex(params, *res.message) << "\n";
    return 0;
}

int cmd_channel(const std::string& config_path, const std::string& in_path,
                const std::string& out_path, std::optional<std::uint64_t> seed) {
    ChannelConfig cfg = read_channel_config_file(config_path);
    if (seed) cfg.seed = *seed;
    SubsetCodeword sent = read_codeword_file(in_path);
    ChannelOutcome outcome = replay(cfg, sent, 0);
    std::ofstream file;
    write_codeword_ordered(out_stream(file, out_path), sent.packet_bits(),
                           outcome.serialization_order);
    std::cerr << "realized t=" << outcome.realized.t << " rho=" << outcome.realized.rho
              << " s=" << outcome.realized.s << " |Y|=" << outcome.received.size() << "\n";
    return 0;
}

int cmd_simulate(const RsFlags& flags, const std::string& config_path, std::uint64_t trials,
                 std::optional<std::uint64_t> seed, unsigned threads,
                 const std::string& out_path) {
    auto params = flags.params();
    ChannelConfig cfg = read_channel_config_file(config_path);
    if (seed) cfg.seed = *seed;
    SimReport report = run_simulation(params, cfg, trials, threads);
    std::ofstream file;
    write_sim_csv(out_stream(file, out_path), report);
    if (!out_path.empty()) {
        std::ofstream summary(out_path + ".summary");
        if (!summary) throw std::runtime_error("cannot write " + out_path + ".summary");
        write_sim_summary(summary, report.summary);
    } else {
        write_sim_summary(std::cerr, report.summary);
    }
    return 0;
}

int cmd_analyze(const std::string& in_path) {
    Codebook cb = read_codebook_file(in_path);
    CodebookAnalysis a = analyze(cb);
    std::cout << a.str();
    if (a.min_distance && a.k_exact) std::cout << ", R=" << a.rate().str();
    std::cout << "\n";
    if (!a.min_distance)
        std::cerr << "warning: minimum distance undefined for a single-codeword book\n";
    return 0;
}

int cmd_mindist(const RsFlags& flags, bool brute) {
    auto params = flags.params();
    std::cout << params.min_distance() << "\n";
    if (brute) {
        Codebook cb(rs_materialize(params));
        auto a = analyze(cb);
        std::cout << "brute-force: " << (a.min_distance ? *a.min_distance : 0) << "\n";
    }
    return 0;
}

int cmd_tobinary(const std::string& in_path, const std::string& out_path) {
    Codebook cb = read_codebook_file(in_path);
    OrderedAmbient amb(cb.packet_bits());
    auto code = convert_subset_code(amb, cb);
    std::ofstream file;
    write_binary_code(out_stream(file, out_path), code);
    return 0;
}

int cmd_frombinary(const std::string& in_path, const std::string& out_path) {
    auto code = read_binary_code_file(in_path);
    std::size_t len = code.front().length();
    unsigned n = 0;
    while ((std::size_t{1} << n) < len) ++n;
    if ((std::size_t{1} << n) != len)
        throw std::invalid_argument("binary code length must be a power of two");
    OrderedAmbient amb(n);
    Codebook cb = convert_binary_code(amb, code);
    std::ofstream file;
    write_codebook(out_stream(file, out_path), cb);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subset codes for the packet permutation channel"};
    app.require_subcommand(1);

    RsFlags rs;
    std::string msg_hex, in_path, out_path, config_path;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = 1000;
    unsigned threads = 1;
    bool brute = false;

    auto* enc = app.add_subcommand("encode", "encode a message to a codeword file");
    add_rs_flags(enc, rs);
    enc->add_option("--msg", msg_hex, "message as hex, k*m bits")->required();
    enc->add_option("--out", out_path, "output codeword file (default stdout)");

    auto* dec = app.add_subcommand("decode", "decode a received codeword file");
    add_rs_flags(dec, rs);
    dec->add_option("--in", in_path, "received codeword file")->required();

    auto* chan = app.add_subcommand("channel", "pass a codeword through the channel");
    chan->add_option("--config", config_path, "channel config file")->required();
    chan->add_option("--in", in_path, "input codeword file")->required();
    chan->add_option("--out", out_path, "received file (default stdout)");
    chan->add_option("--seed", seed, "override config seed");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo encode/channel/decode runs");
    add_rs_flags(sim, rs);
    sim->add_option("--config", config_path, "channel config file")->required();
    sim->add_option("--trials", trials, "number of trials");
    sim->add_option("--seed", seed, "override config seed");
    sim->add_option("--threads", threads, "worker threads (output is order-stable)");
    sim->add_option("--out", out_path, "CSV output; summary goes to <out>.summary");

    auto* ana = app.add_subcommand("analyze", "report codebook type, rate, and flags");
    ana->add_option("--in", in_path, "codebook file")->required();

    auto* mind = app.add_subcommand("mindist", "minimum distance of the RS subset code");
    add_rs_flags(mind, rs);
    mind->add_flag("--brute", brute, "cross-check by materializing all codewords");

    auto* tob = app.add_subcommand("tobinary", "convert a subset codebook to a binary code");
    tob->add_option("--in", in_path, "codebook file")->required();
    tob->add_option("--out", out_path, "binary code file (default stdout)");
    app.add_subcommand("fromsubset", "alias of tobinary")
        ->add_option("--in", in_path)->required();

    auto* fromb = app.add_subcommand("frombinary", "convert a binary code to a subset codebook");
    fromb->add_option("--in", in_path, "binary code file")->required();
    fromb->add_option("--out", out_path, "codebook file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(rs, msg_hex, out_path);
        if (dec->parsed()) return cmd_decode(rs, in_path);
        if (chan->parsed()) return cmd_channel(config_path, in_path, out_path, seed);
        if (sim->parsed()) return cmd_simulate(rs, config_path, trials, seed, threads, out_path);
        if (ana->parsed()) return cmd_analyze(in_path);
        if (mind->parsed()) return cmd_mindist(rs, brute);
        if (tob->parsed() || app.get_subcommand("fromsubset")->parsed())
            return cmd_tobinary(in_path, out_path);
        if (fromb->parsed()) return cmd_frombinary(in_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
