#pragma once

// Text file formats.
//
// Codeword file: first line "n=<bits>", then one packet per line as
// lowercase hex (ceil(n/4) digits, MSB-first, pad bits zero). Lines
// starting with '#' are comments; duplicate packets collapse.
//
// Codebook file: same header, codeword blocks separated by blank lines,
// message-id = block order (0-based).
//
// Binary code file: one codeword per line, characters 0/1, all lines the
// same length (2^n for isometry use).
//
// Channel config file: "key = value" lines; keys mode, p_del, p_err,
// ins_rate, t, rho, s, seed.

#include <iosfwd>
#include <string>
#include <vector>

#include "subsetcode/channel.hpp"
#include "subsetcode/codebook.hpp"
#include "subsetcode/core.hpp"
#include "subsetcode/isometry.hpp"

namespace subsetcode {

SubsetCodeword read_codeword(std::istream& in);
SubsetCodeword read_codeword_file(const std::string& path);
void write_codeword(std::ostream& out, const SubsetCodeword& cw);
void write_codeword_file(const std::string& path, const SubsetCodeword& cw);

/// Writes packets in an explicit order (channel serialization); the set
/// read back is order-independent.
void write_codeword_ordered(std::ostream& out, unsigned packet_bits,
                            const std::vector<std::uint64_t>& packets);

Codebook read_codebook(std::istream& in);
Codebook read_codebook_file(const std::string& path);
void write_codebook(std::ostream& out, const Codebook& cb);
void write_codebook_file(const std::string& path, const Codebook& cb);

std::vector<BinaryWord> read_binary_code(std::istream& in);
std::vector<BinaryWord> read_binary_code_file(const std::string& path);
void write_binary_code(std::ostream& out, const std::vector<BinaryWord>& code);
void write_binary_code_file(const std::string& path, const std::vector<BinaryWord>& code);

ChannelConfig read_channel_config(std::istream& in);
ChannelConfig read_channel_config_file(const std::string& path);

}  // namespace subsetcode
