#include "subsetcode/io.hpp"

#include <fstream>
#include <sstream>

namespace subsetcode {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool is_comment(const std::string& line) { return !line.empty() && line[0] == '#'; }

unsigned parse_header(const std::string& line) {
    if (line.rfind("n=", 0) != 0)
        throw std::invalid_argument("codeword file: first line must be 'n=<bits>', got '" +
                                    line + "'");
    return static_cast<unsigned>(std::stoul(line.substr(2)));
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

}  // namespace

SubsetCodeword read_codeword(std::istream& in) {
    std::string line;
    unsigned n = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || is_comment(line)) continue;
        n = parse_header(line);
        have_header = true;
        break;
    }
    if (!have_header) throw std::invalid_argument("codeword file: missing 'n=' header");
    SubsetCodeword cw(n);
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || is_comment(line)) continue;
        cw.insert(packet_from_hex(line, n));
    }
    return cw;
}

void write_codeword(std::ostream& out, const SubsetCodeword& cw) {
    out << "n=" << cw.packet_bits() << "\n";
    for (std::uint64_t pkt : cw) out << packet_to_hex(pkt, cw.packet_bits()) << "\n";
}

void write_codeword_ordered(std::ostream& out, unsigned packet_bits,
                            const std::vector<std::uint64_t>& packets) {
    out << "n=" << packet_bits << "\n";
    for (std::uint64_t pkt : packets) out << packet_to_hex(pkt, packet_bits) << "\n";
}

Codebook read_codebook(std::istream& in) {
    std::string line;
    unsigned n = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || is_comment(line)) continue;
        n = parse_header(line);
        have_header = true;
        break;
    }
    if (!have_header) throw std::invalid_argument("codebook file: missing 'n=' header");
    std::vector<SubsetCodeword> books;
    SubsetCodeword current(n);
    bool in_block = false;
    while (std::getline(in, line)) {
        line = trim(line);
        if (is_comment(line)) continue;
        if (line.empty()) {
            if (in_block) {
                books.push_back(current);
                current = SubsetCodeword(n);
                in_block = false;
            }
            continue;
        }
        current.insert(packet_from_hex(line, n));
        in_block = true;
    }
    if (in_block) books.push_back(current);
    return Codebook(std::move(books));
}

void write_codebook(std::ostream& out, const Codebook& cb) {
    out << "n=" << cb.packet_bits() << "\n";
    for (const auto& cw : cb.codewords()) {
        for (std::uint64_t pkt : cw) out << packet_to_hex(pkt, cb.packet_bits()) << "\n";
        out << "\n";
    }
}

std::vector<BinaryWord> read_binary_code(std::istream& in) {
    std::vector<BinaryWord> code;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || is_comment(line)) continue;
        code.push_back(BinaryWord::parse(line));
        if (code.back().length() != code.front().length())
            throw std::invalid_argument("binary code file: inconsistent codeword lengths");
    }
    if (code.empty()) throw std::invalid_argument("binary code file: empty");
    return code;
}

void write_binary_code(std::ostream& out, const std::vector<BinaryWord>& code) {
    for (const auto& word : code) out << word.str() << "\n";
}

ChannelConfig read_channel_config(std::istream& in) {
    ChannelConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || is_comment(line)) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("channel config line " + std::to_string(lineno) +
                                        ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "mode") {
            if (value == "stochastic") cfg.mode = ChannelMode::stochastic;
            else if (value == "pattern") cfg.mode = ChannelMode::pattern;
            else throw std::invalid_argument("channel config: unknown mode '" + value + "'");
        } else if (key == "p_del") cfg.p_del = std::stod(value);
        else if (key == "p_err") cfg.p_err = std::stod(value);
        else if (key == "ins_rate") cfg.ins_rate = std::stod(value);
        else if (key == "t") cfg.pattern.t = static_cast<unsigned>(std::stoul(value));
        else if (key == "rho") cfg.pattern.rho = static_cast<unsigned>(std::stoul(value));
        else if (key == "s") cfg.pattern.s = static_cast<unsigned>(std::stoul(value));
        else if (key == "seed") cfg.seed = std::stoull(value);
        else throw std::invalid_argument("channel config: unknown key '" + key + "'");
    }
    return cfg;
}

SubsetCodeword read_codeword_file(const std::string& path) {
    auto in = open_input(path);
    return read_codeword(in);
}

void write_codeword_file(const std::string& path, const SubsetCodeword& cw) {
    auto out = open_output(path);
    write_codeword(out, cw);
}

Codebook read_codebook_file(const std::string& path) {
    auto in = open_input(path);
    return read_codebook(in);
}

void write_codebook_file(const std::string& path, const Codebook& cb) {
    auto out = open_output(path);
    write_codebook(out, cb);
}

std::vector<BinaryWord> read_binary_code_file(const std::string& path) {
    auto in = open_input(path);
    return read_binary_code(in);
}

void write_binary_code_file(const std::string& path, const std::vector<BinaryWord>& code) {
    auto out = open_output(path);
    write_binary_code(out, code);
}

ChannelConfig read_channel_config_file(const std::string& path) {
    auto in = open_input(path);
    return read_channel_config(in);
}

}  // namespace subsetcode
