#include "subsetcode/core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace subsetcode {

namespace {

void require_same_width(const SubsetCodeword& x, const SubsetCodeword& y) {
    if (x.packet_bits() != y.packet_bits())
        throw std::invalid_argument("mismatched packet widths: " +
                                    std::to_string(x.packet_bits()) + " vs " +
                                    std::to_string(y.packet_bits()));
}

}  // namespace

std::size_t intersection_size(const SubsetCodeword& x, const SubsetCodeword& y) {
    require_same_width(x, y);
    // Both sets are ordered; a merge walk counts common elements.
    auto ix = x.begin(), iy = y.begin();
    std::size_t common = 0;
    while (ix != x.end() && iy != y.end()) {
        if (*ix < *iy) ++ix;
        else if (*iy < *ix) ++iy;
        else { ++common; ++ix; ++iy; }
    }
    return common;
}

std::size_t subset_distance(const SubsetCodeword& x, const SubsetCodeword& y) {
    return x.size() + y.size() - 2 * intersection_size(x, y);
}

std::size_t injection_distance(const SubsetCodeword& x, const SubsetCodeword& y) {
    return std::max(x.size(), y.size()) - intersection_size(x, y);
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::string CodeParams::str() const {
    std::ostringstream out;
    out << '[' << n << ',' << k << ',' << d << ';' << l << ']';
    return out.str();
}

std::string packet_to_hex(std::uint64_t packet, unsigned bits) {
    unsigned digits = (bits + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (unsigned i = 0; i < digits; ++i)
        out[digits - 1 - i] = kHex[(packet >> (4 * i)) & 0xf];
    return out;
}

std::uint64_t packet_from_hex(const std::string& hex, unsigned bits) {
    unsigned digits = (bits + 3) / 4;
    if (hex.size() != digits)
        throw std::invalid_argument("packet hex '" + hex + "': expected " +
                                    std::to_string(digits) + " digits for n=" +
                                    std::to_string(bits));
    std::uint64_t value = 0;
    for (char c : hex) {
        int nibble;
        if (c >= '0' && c <= '9') nibble = c - '0';
        else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nibble = c - 'A' + 10;
        else throw std::invalid_argument("packet hex '" + hex + "': bad digit");
        value = (value << 4) | static_cast<std::uint64_t>(nibble);
    }
    if (bits < 64 && value >= (std::uint64_t{1} << bits))
        throw std::invalid_argument("packet hex '" + hex + "': pad bits set for n=" +
                                    std::to_string(bits));
    return value;
}

}  // namespace subsetcode
