#include <doctest.h>

#include <sstream>

#include "pattern_support.hpp"
#include "subsetcode/io.hpp"

using namespace subsetcode;

TEST_CASE("codeword file round trip with comments and duplicates") {
    std::istringstream in(
        "# sample codeword\n"
        "n=7\n"
        "0a\n"
        "\n"
        "2b\n"
        "0a\n"  // duplicate collapses
        "# trailing comment\n");
    SubsetCodeword cw = read_codeword(in);
    CHECK(cw.packet_bits() == 7);
    CHECK(cw.size() == 2);
    CHECK(cw.contains(0x0a));
    CHECK(cw.contains(0x2b));

    std::ostringstream out;
    write_codeword(out, cw);
    CHECK(out.str() == "n=7\n0a\n2b\n");

    std::istringstream back(out.str());
    CHECK(read_codeword(back) == cw);
}

TEST_CASE("codeword file rejects malformed input") {
    std::istringstream no_header("0a\n");
    CHECK_THROWS_AS(read_codeword(no_header), std::invalid_argument);
    std::istringstream bad_width("n=7\nff\n");  // pad bit set
    CHECK_THROWS_AS(read_codeword(bad_width), std::invalid_argument);
    std::istringstream empty("");
    CHECK_THROWS_AS(read_codeword(empty), std::invalid_argument);
}

TEST_CASE("codebook file: blocks separated by blank lines") {
    std::istringstream in(
        "n=2\n"
        "0\n1\n"
        "\n"
        "0\n2\n"
        "\n"
        "1\n2\n"
        "\n"
        "2\n3\n");
    Codebook cb = read_codebook(in);
    CHECK(cb.size() == 4);
    CHECK(cb.codewords() == testsupport::toy_code());

    std::ostringstream out;
    write_codebook(out, cb);
    std::istringstream back(out.str());
    CHECK(read_codebook(back).codewords() == cb.codewords());
}

TEST_CASE("binary code file round trip") {
    std::istringstream in("1100\n1010\n0110\n0011\n");
    auto code = read_binary_code(in);
    REQUIRE(code.size() == 4);
    CHECK(code[0].str() == "1100");

    std::ostringstream out;
    write_binary_code(out, code);
    CHECK(out.str() == "1100\n1010\n0110\n0011\n");

    std::istringstream ragged("110\n1010\n");
    CHECK_THROWS_AS(read_binary_code(ragged), std::invalid_argument);
}

TEST_CASE("channel config parsing") {
    std::istringstream in(
        "# permutation channel\n"
        "mode = stochastic\n"
        "p_del = 0.25\n"
        "p_err = 0.1\n"
        "ins_rate = 0.5\n"
        "seed = 12345\n");
    ChannelConfig cfg = read_channel_config(in);
    CHECK(cfg.mode == ChannelMode::stochastic);
    CHECK(cfg.p_del == doctest::Approx(0.25));
    CHECK(cfg.p_err == doctest::Approx(0.1));
    CHECK(cfg.ins_rate == doctest::Approx(0.5));
    CHECK(cfg.seed == 12345);

    std::istringstream pat(
        "mode = pattern\n"
        "t = 1\nrho = 2\ns = 0\nseed = 9\n");
    ChannelConfig pcfg = read_channel_config(pat);
    CHECK(pcfg.mode == ChannelMode::pattern);
    CHECK(pcfg.pattern.t == 1);
    CHECK(pcfg.pattern.rho == 2);
    CHECK(pcfg.pattern.s == 0);

    std::istringstream bad("mode = carrier\n");
    CHECK_THROWS_AS(read_channel_config(bad), std::invalid_argument);
    std::istringstream junk("frobnicate = 3\n");
    CHECK_THROWS_AS(read_channel_config(junk), std::invalid_argument);
}
