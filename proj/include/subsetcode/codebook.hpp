#pragma once

// Explicit subset codebooks: true parameter analysis by brute force and
// generic minimum-distance decoding. This is the reference decoder; it is
// a linear scan and guarded for desk-scale books only.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subsetcode/core.hpp"

namespace subsetcode {

class Codebook {
  public:
    /// Codewords must be pairwise distinct sets over one ambient width;
    /// message-id is the position in the list.
    explicit Codebook(std::vector<SubsetCodeword> codewords);

    std::size_t size() const { return codewords_.size(); }
    unsigned packet_bits() const { return codewords_.front().packet_bits(); }
    const SubsetCodeword& codeword(std::size_t id) const { return codewords_.at(id); }
    const std::vector<SubsetCodeword>& codewords() const { return codewords_; }

  private:
    std::vector<SubsetCodeword> codewords_;
};

struct CodebookAnalysis {
    unsigned n;
    std::size_t count;                 // |C|
    double k_bits;                     // log2 |C|
    bool k_exact;                      // true when |C| is a power of two
    std::optional<unsigned> min_distance;  // undefined for single-codeword books
    unsigned max_cardinality;          // l
    bool constant_cardinality;

    std::optional<CodeParams> type() const;
    Rational rate() const;  // requires k_exact and defined distance
    std::string str() const;
};

/// Brute-force pairwise minimum distance, max cardinality, and exact
/// information length.
CodebookAnalysis analyze(const Codebook& cb);

struct MdDecodeResult {
    std::vector<std::size_t> minimizers;  // all ids attaining the minimum
    std::size_t distance = 0;

    bool ambiguous() const { return minimizers.size() > 1; }
    std::size_t id() const { return minimizers.front(); }
};

/// Minimum subset-distance decoding; ties are reported, never broken.
MdDecodeResult md_decode(const Codebook& cb, const SubsetCodeword& received);

struct CorrectabilityReport {
    bool correctable;               // 2(rho + 2t + s) < d
    unsigned budget;                // rho + 2t + s
    unsigned min_distance;
    std::optional<bool> deletion_only_ok;       // rho <= floor((d-1)/2), when t = s = 0
    std::optional<unsigned> deletion_only_radius;
};

/// Evaluates the correction guarantee for a pattern of t errors, rho
/// deletions, and s insertions against the codebook's minimum distance.
CorrectabilityReport correctability_check(const Codebook& cb, unsigned t, unsigned rho,
                                          unsigned s);
CorrectabilityReport correctability_check(unsigned min_distance, unsigned t, unsigned rho,
                                          unsigned s);

}  // namespace subsetcode
