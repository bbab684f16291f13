#include "subsetcode/gf2m.hpp"

#include <sstream>

namespace subsetcode {

namespace {

// Conway-style primitive polynomials, degree 2..16.
constexpr std::uint32_t kDefaultPoly[17] = {
    0,      0,      0x7,    0xb,    0x13,   0x25,   0x43,   0x89,  0x11d,
    0x211,  0x409,  0x805,  0x1053, 0x201b, 0x4443, 0x8003, 0x1100b,
};

}  // namespace

std::uint32_t FieldSpec::default_poly(unsigned m) {
    if (m < 2 || m > 16)
        throw std::invalid_argument("gf2m: extension degree must be in [2, 16]");
    return kDefaultPoly[m];
}

FieldSpec::FieldSpec(unsigned m, std::uint32_t poly) : m_(m), poly_(poly) {
    if (m_ < 2 || m_ > 16)
        throw std::invalid_argument("gf2m: extension degree must be in [2, 16]");
    if (poly_ == 0) poly_ = kDefaultPoly[m_];
    if ((poly_ >> m_) != 1)
        throw std::invalid_argument("gf2m: reduction polynomial must have degree exactly " +
                                    std::to_string(m_));
    // Primitive iff x generates the full multiplicative group.
    std::uint32_t t = 2 % order();
    std::uint32_t group = order() - 1;
    for (std::uint32_t steps = 1; steps < group; ++steps) {
        if (t == 1)
            throw std::invalid_argument("gf2m: reduction polynomial is not primitive: " + str());
        t = mul(t, 2);
    }
    if (t != 1)
        throw std::invalid_argument("gf2m: reduction polynomial is not primitive: " + str());
}

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    return a ^ b;
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
    check_element(a);
    check_element(b);
    // Carry-less shift-and-add with interleaved reduction.
    std::uint32_t acc = 0;
    std::uint32_t top = 1u << (m_ - 1);
    while (b != 0) {
        if (b & 1) acc ^= a;
        b >>= 1;
        bool carry = (a & top) != 0;
        a <<= 1;
        if (carry) a ^= poly_;
        a &= order() - 1;
    }
    return acc;
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
    check_element(a);
    std::uint32_t acc = 1;
    while (e != 0) {
        if (e & 1) acc = mul(acc, a);
        a = mul(a, a);
        e >>= 1;
    }
    return acc;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
    check_element(a);
    if (a == 0) throw std::domain_error("gf2m: division by zero in " + str());
    return pow(a, order() - 2);
}

std::uint32_t FieldSpec::eval_poly(std::span<const std::uint32_t> coeffs,
                                   std::uint32_t z) const {
    if (coeffs.empty())
        throw std::invalid_argument("gf2m: eval_poly needs at least one coefficient");
    check_element(z);
    std::uint32_t acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        check_element(coeffs[i]);
        acc = add(mul(acc, z), coeffs[i]);
    }
    return acc;
}

std::string FieldSpec::str() const {
    std::ostringstream out;
    out << "gf(2^" << m_ << ", poly=0x" << std::hex << poly_ << ")";
    return out.str();
}

}  // namespace subsetcode
