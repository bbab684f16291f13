#include "subsetcode/codebook.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subsetcode {

namespace {
constexpr std::size_t kMaxBookSize = std::size_t{1} << 20;
}

Codebook::Codebook(std::vector<SubsetCodeword> codewords) : codewords_(std::move(codewords)) {
    if (codewords_.empty())
        throw std::invalid_argument("Codebook: must be nonempty");
    if (codewords_.size() > kMaxBookSize)
        throw std::invalid_argument("Codebook: larger than 2^20 codewords (desk-scale guard)");
    unsigned n = codewords_.front().packet_bits();
    for (const auto& cw : codewords_)
        if (cw.packet_bits() != n)
            throw std::invalid_argument("Codebook: mixed packet widths");
    auto sorted = codewords_;
    std::sort(sorted.begin(), sorted.end(),
              [](const SubsetCodeword& a, const SubsetCodeword& b) { return a.elems() < b.elems(); });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == sorted[i + 1])
            throw std::invalid_argument("Codebook: duplicate codewords");
}

std::optional<CodeParams> CodebookAnalysis::type() const {
    if (!min_distance) return std::nullopt;
    unsigned k = static_cast<unsigned>(std::lround(k_bits));
    if (!k_exact || k == 0) return std::nullopt;
    return CodeParams(n, k, *min_distance, max_cardinality);
}

Rational CodebookAnalysis::rate() const {
    if (!k_exact)
        throw std::domain_error("rate undefined: |C| is not a power of two");
    return Rational(static_cast<long long>(std::lround(k_bits)),
                    static_cast<long long>(n) * max_cardinality);
}

std::string CodebookAnalysis::str() const {
    std::ostringstream out;
    out << '[' << n << ',';
    if (k_exact) out << static_cast<unsigned>(std::lround(k_bits));
    else out << "log2(" << count << ")";
    out << ',';
    if (min_distance) out << *min_distance;
    else out << "?";
    out << ';' << max_cardinality << ']';
    if (constant_cardinality) out << ", constant-cardinality";
    return out.str();
}

CodebookAnalysis analyze(const Codebook& cb) {
    CodebookAnalysis a{};
    a.n = cb.packet_bits();
    a.count = cb.size();
    a.k_bits = std::log2(static_cast<double>(cb.size()));
    a.k_exact = (cb.size() & (cb.size() - 1)) == 0;
    a.max_cardinality = 0;
    bool constant = true;
    std::size_t first = cb.codeword(0).size();
    for (const auto& cw : cb.codewords()) {
        a.max_cardinality = std::max<unsigned>(a.max_cardinality, static_cast<unsigned>(cw.size()));
        constant = constant && cw.size() == first;
    }
    a.constant_cardinality = constant;
    if (cb.size() >= 2) {
        std::size_t best = SIZE_MAX;
        for (std::size_t i = 0; i < cb.size(); ++i)
            for (std::size_t j = i + 1; j < cb.size(); ++j)
                best = std::min(best, subset_distance(cb.codeword(i), cb.codeword(j)));
        a.min_distance = static_cast<unsigned>(best);
    }
    return a;
}

MdDecodeResult md_decode(const Codebook& cb, const SubsetCodeword& received) {
    if (received.packet_bits() != cb.packet_bits())
        throw std::invalid_argument("md_decode: packet width mismatch");
    MdDecodeResult res;
    res.distance = SIZE_MAX;
    for (std::size_t id = 0; id < cb.size(); ++id) {
        std::size_t d = subset_distance(cb.codeword(id), received);
        if (d < res.distance) {
            res.distance = d;
            res.minimizers.clear();
        }
        if (d == res.distance) res.minimizers.push_back(id);
    }
    return res;
}

CorrectabilityReport correctability_check(unsigned min_distance, unsigned t, unsigned rho,
                                          unsigned s) {
    CorrectabilityReport r{};
    r.min_distance = min_distance;
    r.budget = rho + 2 * t + s;
    r.correctable = 2 * r.budget < min_distance;
    if (t == 0 && s == 0) {
        r.deletion_only_radius = (min_distance - 1) / 2;
        r.deletion_only_ok = rho <= *r.deletion_only_radius;
    }
    return r;
}

CorrectabilityReport correctability_check(const Codebook& cb, unsigned t, unsigned rho,
                                          unsigned s) {
    auto a = analyze(cb);
    if (!a.min_distance)
        throw std::domain_error("correctability_check: minimum distance undefined");
    return correctability_check(*a.min_distance, t, rho, s);
}

}  // namespace subsetcode
