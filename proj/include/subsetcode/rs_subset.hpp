#pragma once

// Constant-cardinality subset code built from a Reed-Solomon packet-level
// code plus sequence numbers.
//
// A message of k field elements is a polynomial u(z) = sum p_i z^i; the
// codeword is the set { seq(i) || u(alpha_i) : i = 0..l-1 } of l tagged
// packets, each m + ceil(log2 l) bits wide. Minimum subset distance is
// 2(l - k + 1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsetcode/core.hpp"
#include "subsetcode/gf2m.hpp"

namespace subsetcode {

struct RsSubsetParams {
    FieldSpec field;
    unsigned k;
    unsigned l;
    std::vector<std::uint32_t> eval_points;  // pairwise distinct
    unsigned seq_bits;                       // ceil(log2 l), 0 when l == 1

    /// Default evaluation points are the field elements 0, 1, ..., l-1.
    RsSubsetParams(FieldSpec f, unsigned k, unsigned l);
    RsSubsetParams(FieldSpec f, unsigned k, unsigned l, std::vector<std::uint32_t> points);

    unsigned packet_bits() const { return field.m() + seq_bits; }
    unsigned min_distance() const { return 2 * (l - k + 1); }
    unsigned info_bits() const { return k * field.m(); }

    CodeParams code_params() const {
        return CodeParams(packet_bits(), info_bits(), min_distance(), l);
    }

    /// Packet layout: seq in the top seq_bits, payload in the low m bits.
    std::uint64_t tagged_packet(unsigned seq, std::uint32_t payload) const;
    unsigned seq_of(std::uint64_t packet) const;
    std::uint32_t payload_of(std::uint64_t packet) const;
};

/// Message of exactly k field elements p_0..p_{k-1}.
using RsMessage = std::vector<std::uint32_t>;

SubsetCodeword rs_encode(const RsSubsetParams& params, const RsMessage& msg);

struct RsDecodeResult {
    std::optional<RsMessage> message;  // empty on decode failure
    unsigned discarded = 0;            // packets with seq >= l
    unsigned conflicts = 0;            // seq values with >= 2 distinct payloads
    unsigned erasures = 0;             // missing or conflicted positions
    std::string reason;                // diagnostic on failure

    bool ok() const { return message.has_value(); }
};

/// Errors-and-erasures decoding. Discards invalid sequence numbers, turns
/// payload conflicts into erasures, then runs Berlekamp-Welch on the
/// surviving positions. Succeeds exactly when 2e + f <= l - k for e wrong
/// symbols and f erasures; the corrected codeword is re-encoded and checked
/// against that budget before the message is returned.
RsDecodeResult rs_decode(const RsSubsetParams& params, const SubsetCodeword& received);

struct RsDescription {
    CodeParams type;        // [m + ceil(log2 l), km, 2(l-k+1); l]
    Rational rate;          // km / (l (m + ceil(log2 l)))
    double idealized_rate;  // km / (l (m + log2 l)), differs when l is not a power of 2
    bool seq_bits_exact;    // true when l is a power of two (or 1)

    std::string str() const;
};

RsDescription rs_describe(const RsSubsetParams& params);

/// All 2^(km) codewords, message index i = concatenated m-bit packets.
/// Guarded for small parameter sets only.
std::vector<SubsetCodeword> rs_materialize(const RsSubsetParams& params);

RsMessage rs_message_from_index(const RsSubsetParams& params, std::uint64_t index);
std::uint64_t rs_message_to_index(const RsSubsetParams& params, const RsMessage& msg);

}  // namespace subsetcode
