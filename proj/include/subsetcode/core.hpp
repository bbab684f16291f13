#pragma once

// Ambient packet space, subset codewords, and the two set metrics.
//
// A packet is an n-bit value (MSB-first canonical order, rendered as
// ceil(n/4) lowercase hex digits). A subset codeword is a duplicate-free
// set of packets over one ambient width; iteration order is ascending
// numeric value so serialization is deterministic.

#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace subsetcode {

/// Width of the packet universe: n bits per packet, |S| = 2^n.
struct AmbientSpec {
    unsigned n;

    explicit AmbientSpec(unsigned bits) : n(bits) {
        if (n < 1 || n > 63)
            throw std::invalid_argument("AmbientSpec: packet width must be in [1, 63]");
    }

    std::uint64_t universe_size() const { return std::uint64_t{1} << n; }

    bool contains(std::uint64_t packet) const { return n >= 64 || packet < universe_size(); }

    friend bool operator==(const AmbientSpec&, const AmbientSpec&) = default;
};

/// Exact rational value, kept reduced. Used for code rates.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Code type [n, k, d; l]: packet width, information bits, minimum subset
/// distance, maximum codeword cardinality.
struct CodeParams {
    unsigned n;
    unsigned k;
    unsigned d;
    unsigned l;

    CodeParams(unsigned n_, unsigned k_, unsigned d_, unsigned l_) : n(n_), k(k_), d(d_), l(l_) {
        if (n < 1 || k < 1 || d < 1 || l < 1)
            throw std::invalid_argument("CodeParams: all parameters must be positive");
    }

    Rational rate() const { return Rational(k, static_cast<long long>(n) * l); }

    std::string str() const;
};

/// A finite set of packets over one ambient width. Set semantics: inserting
/// an existing element is a no-op; iteration is ascending numeric order.
class SubsetCodeword {
  public:
    explicit SubsetCodeword(unsigned packet_bits) : spec_(packet_bits) {}
    explicit SubsetCodeword(AmbientSpec spec) : spec_(spec) {}
    SubsetCodeword(unsigned packet_bits, std::initializer_list<std::uint64_t> packets)
        : spec_(packet_bits) {
        for (auto p : packets) insert(p);
    }

    unsigned packet_bits() const { return spec_.n; }
    const AmbientSpec& ambient() const { return spec_; }

    /// Returns false if the packet was already present.
    bool insert(std::uint64_t packet) {
        if (!spec_.contains(packet))
            throw std::invalid_argument("SubsetCodeword: packet exceeds ambient width");
        return elems_.insert(packet).second;
    }

    bool erase(std::uint64_t packet) { return elems_.erase(packet) > 0; }
    bool contains(std::uint64_t packet) const { return elems_.count(packet) > 0; }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const std::set<std::uint64_t>& elems() const { return elems_; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    friend bool operator==(const SubsetCodeword& a, const SubsetCodeword& b) {
        return a.spec_ == b.spec_ && a.elems_ == b.elems_;
    }

  private:
    AmbientSpec spec_;
    std::set<std::uint64_t> elems_;
};

/// Subset metric: |X xor Y| = |X| + |Y| - 2|X & Y|.
std::size_t subset_distance(const SubsetCodeword& x, const SubsetCodeword& y);

/// Injection metric: max{|X\Y|, |Y\X|} = max{|X|, |Y|} - |X & Y|.
std::size_t injection_distance(const SubsetCodeword& x, const SubsetCodeword& y);

std::size_t intersection_size(const SubsetCodeword& x, const SubsetCodeword& y);

inline Rational code_rate(const CodeParams& p) { return p.rate(); }

/// Renders an n-bit packet as ceil(n/4) lowercase hex digits, MSB-first,
/// upper pad bits zero.
std::string packet_to_hex(std::uint64_t packet, unsigned bits);

/// Parses the canonical hex rendering; rejects wrong digit counts and set
/// pad bits.
std::uint64_t packet_from_hex(const std::string& hex, unsigned bits);

}  // namespace subsetcode
