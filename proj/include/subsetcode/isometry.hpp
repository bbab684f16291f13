#pragma once

// Distance-preserving bijection between subsets of an ordered ambient set
// and binary words of length 2^n: bit j of the image is 1 iff the j-th
// packet (ascending numeric order) is in the subset. Hamming distance on
// words equals subset distance on sets. Capped at n <= 24 since images
// have exponential length.

#include <cstdint>
#include <string>
#include <vector>

#include "subsetcode/codebook.hpp"
#include "subsetcode/core.hpp"

namespace subsetcode {

struct OrderedAmbient {
    AmbientSpec base;

    explicit OrderedAmbient(unsigned n) : base(n) {
        if (n > 24)
            throw std::domain_error("OrderedAmbient: 2^n image length infeasible for n > 24");
    }

    std::size_t universe_size() const { return std::size_t{1} << base.n; }
};

/// Fixed-length bitstring backed by 64-bit words; position 0 is the
/// leftmost character of the text rendering.
class BinaryWord {
  public:
    explicit BinaryWord(std::size_t length);

    std::size_t length() const { return length_; }
    bool get(std::size_t pos) const;
    void set(std::size_t pos, bool value);

    std::size_t weight() const;
    BinaryWord operator^(const BinaryWord& other) const;

    std::string str() const;
    static BinaryWord parse(const std::string& text);

    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

  private:
    std::size_t length_;
    std::vector<std::uint64_t> words_;
};

std::size_t hamming_distance(const BinaryWord& x, const BinaryWord& y);

BinaryWord subset_to_binary(const OrderedAmbient& amb, const SubsetCodeword& x);
SubsetCodeword binary_to_subset(const OrderedAmbient& amb, const BinaryWord& word);

/// Image of a binary code under the inverse map; preserves minimum
/// distance and turns weights into cardinalities.
Codebook convert_binary_code(const OrderedAmbient& amb, const std::vector<BinaryWord>& code);
std::vector<BinaryWord> convert_subset_code(const OrderedAmbient& amb, const Codebook& cb);

}  // namespace subsetcode
