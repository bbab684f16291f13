#pragma once

// GF(2^m) arithmetic for 2 <= m <= 16, table-free.
//
// Elements are m-bit integers; bit i is the coefficient of x^i. The
// reduction polynomial must be primitive, which is verified at FieldSpec
// construction by checking that x has multiplicative order 2^m - 1.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace subsetcode {

class FieldSpec {
  public:
    /// poly == 0 selects the shipped default primitive polynomial for m.
    explicit FieldSpec(unsigned m, std::uint32_t poly = 0);

    unsigned m() const { return m_; }
    std::uint32_t reduction_poly() const { return poly_; }
    std::uint32_t order() const { return 1u << m_; }

    bool contains(std::uint32_t a) const { return a < order(); }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// Horner evaluation of sum coeffs[i] * z^i.
    std::uint32_t eval_poly(std::span<const std::uint32_t> coeffs, std::uint32_t z) const;

    /// Default primitive polynomial shipped for degree m.
    static std::uint32_t default_poly(unsigned m);

    /// Diagnostic rendering, e.g. "gf(2^4, poly=0x13)".
    std::string str() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    void check_element(std::uint32_t a) const {
        if (!contains(a))
            throw std::invalid_argument("field element out of range for " + str());
    }

    unsigned m_;
    std::uint32_t poly_;
};

}  // namespace subsetcode
