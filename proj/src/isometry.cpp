#include "subsetcode/isometry.hpp"

#include <bit>

namespace subsetcode {

BinaryWord::BinaryWord(std::size_t length)
    : length_(length), words_((length + 63) / 64, 0) {
    if (length == 0) throw std::invalid_argument("BinaryWord: zero length");
}

bool BinaryWord::get(std::size_t pos) const {
    if (pos >= length_) throw std::out_of_range("BinaryWord: position out of range");
    return (words_[pos / 64] >> (pos % 64)) & 1;
}

void BinaryWord::set(std::size_t pos, bool value) {
    if (pos >= length_) throw std::out_of_range("BinaryWord: position out of range");
    std::uint64_t mask = std::uint64_t{1} << (pos % 64);
    if (value) words_[pos / 64] |= mask;
    else words_[pos / 64] &= ~mask;
}

std::size_t BinaryWord::weight() const {
    std::size_t w = 0;
    for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

BinaryWord BinaryWord::operator^(const BinaryWord& other) const {
    if (length_ != other.length_)
        throw std::invalid_argument("BinaryWord: length mismatch in xor");
    BinaryWord out(length_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        out.words_[i] = words_[i] ^ other.words_[i];
    return out;
}

std::string BinaryWord::str() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) out[i] = '1';
    return out;
}

BinaryWord BinaryWord::parse(const std::string& text) {
    BinaryWord out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') out.set(i, true);
        else if (text[i] != '0')
            throw std::invalid_argument("BinaryWord: characters must be 0 or 1");
    }
    return out;
}

std::size_t hamming_distance(const BinaryWord& x, const BinaryWord& y) {
    return (x ^ y).weight();
}

BinaryWord subset_to_binary(const OrderedAmbient& amb, const SubsetCodeword& x) {
    if (x.packet_bits() != amb.base.n)
        throw std::invalid_argument("subset_to_binary: ambient width mismatch");
    BinaryWord out(amb.universe_size());
    for (std::uint64_t packet : x)
        out.set(static_cast<std::size_t>(packet), true);
    return out;
}

SubsetCodeword binary_to_subset(const OrderedAmbient& amb, const BinaryWord& word) {
    if (word.length() != amb.universe_size())
        throw std::invalid_argument("binary_to_subset: word length must be 2^n");
    SubsetCodeword out(amb.base.n);
    for (std::size_t j = 0; j < word.length(); ++j)
        if (word.get(j)) out.insert(j);
    return out;
}

Codebook convert_binary_code(const OrderedAmbient& amb, const std::vector<BinaryWord>& code) {
    std::vector<SubsetCodeword> subsets;
    subsets.reserve(code.size());
    for (const auto& word : code)
        subsets.push_back(binary_to_subset(amb, word));
    return Codebook(std::move(subsets));
}

std::vector<BinaryWord> convert_subset_code(const OrderedAmbient& amb, const Codebook& cb) {
    std::vector<BinaryWord> out;
    out.reserve(cb.size());
    for (const auto& cw : cb.codewords())
        out.push_back(subset_to_binary(amb, cw));
    return out;
}

}  // namespace subsetcode
