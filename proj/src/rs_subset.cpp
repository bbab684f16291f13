#include "subsetcode/rs_subset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <cmath>

namespace subsetcode {

namespace {

unsigned ceil_log2(unsigned x) {
    unsigned bits = 0;
    while ((1u << bits) < x) ++bits;
    return bits;
}

void validate(const RsSubsetParams& p) {
    if (p.k < 1 || p.k > p.l)
        throw std::invalid_argument("rs_subset: need 1 <= k <= l");
    if (p.l > p.field.order())
        throw std::invalid_argument("rs_subset: l exceeds field size, no distinct evaluation points");
    if (p.eval_points.size() != p.l)
        throw std::invalid_argument("rs_subset: need exactly l evaluation points");
    std::vector<std::uint32_t> sorted = p.eval_points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("rs_subset: evaluation points must be pairwise distinct");
    for (auto a : p.eval_points)
        if (!p.field.contains(a))
            throw std::invalid_argument("rs_subset: evaluation point outside " + p.field.str());
}

std::vector<std::uint32_t> identity_points(unsigned l) {
    std::vector<std::uint32_t> pts(l);
    for (unsigned i = 0; i < l; ++i) pts[i] = i;
    return pts;
}

// Solves the linear system M * v = rhs over GF(2^m) by Gaussian elimination.
// Free variables are set to zero. Returns nullopt if inconsistent.
std::optional<std::vector<std::uint32_t>> solve_linear(const FieldSpec& gf,
                                                       std::vector<std::vector<std::uint32_t>> m,
                                                       std::vector<std::uint32_t> rhs) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        std::uint32_t scale = gf.inv(m[row][col]);
        for (std::size_t c = col; c < cols; ++c) m[row][c] = gf.mul(m[row][c], scale);
        rhs[row] = gf.mul(rhs[row], scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            std::uint32_t f = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] ^= gf.mul(f, m[row][c]);
            rhs[r] ^= gf.mul(f, rhs[row]);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<std::uint32_t> v(cols, 0);
    for (std::size_t r = 0; r < row; ++r) v[pivot_col[r]] = rhs[r];
    return v;
}

// Quotient of a(x) / b(x); nullopt if the division is not exact.
std::optional<std::vector<std::uint32_t>> poly_divide(const FieldSpec& gf,
                                                      std::vector<std::uint32_t> a,
                                                      const std::vector<std::uint32_t>& b) {
    std::size_t db = b.size();
    while (db > 0 && b[db - 1] == 0) --db;
    if (db == 0) return std::nullopt;
    std::size_t da = a.size();
    while (da > 0 && a[da - 1] == 0) --da;
    if (da < db) {
        // a must be zero for an exact division by a higher-degree divisor
        if (da == 0) return std::vector<std::uint32_t>{0};
        return std::nullopt;
    }
    std::vector<std::uint32_t> q(da - db + 1, 0);
    std::uint32_t lead_inv = gf.inv(b[db - 1]);
    for (std::size_t i = da; i >= db; --i) {
        std::uint32_t coef = gf.mul(a[i - 1], lead_inv);
        q[i - db] = coef;
        if (coef != 0)
            for (std::size_t j = 0; j < db; ++j)
                a[i - db + j] ^= gf.mul(coef, b[j]);
    }
    for (std::size_t j = 0; j < db - 1; ++j)
        if (a[j] != 0) return std::nullopt;  // nonzero remainder
    return q;
}

}  // namespace

RsSubsetParams::RsSubsetParams(FieldSpec f, unsigned k_, unsigned l_)
    : RsSubsetParams(std::move(f), k_, l_, identity_points(l_)) {}

RsSubsetParams::RsSubsetParams(FieldSpec f, unsigned k_, unsigned l_,
                               std::vector<std::uint32_t> points)
    : field(std::move(f)), k(k_), l(l_), eval_points(std::move(points)),
      seq_bits(ceil_log2(l_)) {
    validate(*this);
}

std::uint64_t RsSubsetParams::tagged_packet(unsigned seq, std::uint32_t payload) const {
    return (static_cast<std::uint64_t>(seq) << field.m()) | payload;
}

unsigned RsSubsetParams::seq_of(std::uint64_t packet) const {
    return static_cast<unsigned>(packet >> field.m());
}

std::uint32_t RsSubsetParams::payload_of(std::uint64_t packet) const {
    return static_cast<std::uint32_t>(packet & (field.order() - 1));
}

SubsetCodeword rs_encode(const RsSubsetParams& params, const RsMessage& msg) {
    if (msg.size() != params.k)
        throw std::invalid_argument("rs_encode: message has " + std::to_string(msg.size()) +
                                    " packets, expected k=" + std::to_string(params.k));
    SubsetCodeword cw(params.packet_bits());
    for (unsigned i = 0; i < params.l; ++i) {
        std::uint32_t payload = params.field.eval_poly(msg, params.eval_points[i]);
        cw.insert(params.tagged_packet(i, payload));
    }
    return cw;
}

RsDecodeResult rs_decode(const RsSubsetParams& params, const SubsetCodeword& received) {
    if (received.packet_bits() != params.packet_bits())
        throw std::invalid_argument("rs_decode: received packet width " +
                                    std::to_string(received.packet_bits()) + ", expected " +
                                    std::to_string(params.packet_bits()));
    const FieldSpec& gf = params.field;
    RsDecodeResult res;

    // (a) drop invalid sequence numbers, (b) collect payloads per index
    std::map<unsigned, std::set<std::uint32_t>> by_seq;
    for (std::uint64_t pkt : received) {
        unsigned seq = params.seq_of(pkt);
        if (seq >= params.l) { ++res.discarded; continue; }
        by_seq[seq].insert(params.payload_of(pkt));
    }

    // (c) symbol vector with erasures at missing or conflicted indices
    std::vector<unsigned> known_pos;
    std::vector<std::uint32_t> known_sym;
    for (unsigned i = 0; i < params.l; ++i) {
        auto it = by_seq.find(i);
        if (it == by_seq.end()) continue;
        if (it->second.size() > 1) { ++res.conflicts; continue; }
        known_pos.push_back(i);
        known_sym.push_back(*it->second.begin());
    }
    const unsigned n_known = static_cast<unsigned>(known_pos.size());
    res.erasures = params.l - n_known;

    if (n_known < params.k) {
        res.reason = "too many erasures: " + std::to_string(res.erasures) + " > l-k=" +
                     std::to_string(params.l - params.k);
        return res;
    }

    // (d) Berlekamp-Welch on the surviving positions. With e_max =
    // floor((n_known - k) / 2), any solution of Q(a_i) = y_i E(a_i) with
    // E monic of degree e_max yields Q / E = u whenever at most e_max
    // symbols are wrong.
    const unsigned e_max = (n_known - params.k) / 2;
    const unsigned nq = e_max + params.k;  // unknown Q coefficients
    std::vector<std::vector<std::uint32_t>> mat(n_known,
                                                std::vector<std::uint32_t>(nq + e_max, 0));
    std::vector<std::uint32_t> rhs(n_known);
    for (unsigned r = 0; r < n_known; ++r) {
        std::uint32_t a = params.eval_points[known_pos[r]];
        std::uint32_t y = known_sym[r];
        std::uint32_t ap = 1;
        for (unsigned j = 0; j < nq; ++j) { mat[r][j] = ap; ap = gf.mul(ap, a); }
        ap = 1;
        for (unsigned j = 0; j < e_max; ++j) { mat[r][nq + j] = gf.mul(y, ap); ap = gf.mul(ap, a); }
        rhs[r] = gf.mul(y, gf.pow(a, e_max));
    }
    auto sol = solve_linear(gf, std::move(mat), std::move(rhs));
    std::optional<RsMessage> msg;
    if (sol) {
        std::vector<std::uint32_t> q(sol->begin(), sol->begin() + nq);
        std::vector<std::uint32_t> e(sol->begin() + nq, sol->end());
        e.push_back(1);  // monic of degree e_max
        auto u = poly_divide(gf, q, e);
        if (u && u->size() <= params.k) {
            u->resize(params.k, 0);
            msg = std::move(*u);
        }
    }
    if (!msg) {
        res.reason = "beyond errors-and-erasures budget (2e + f > l - k)";
        return res;
    }

    // (e) re-encode and verify the corrected codeword sits inside the
    // packing radius floor((d-1)/2) = l - k of the received set. Symbol
    // counts alone are not enough: conflicted indices can leave a
    // low-erasure interpolation whose subset distance is far beyond the
    // radius, which a minimum-distance decoder would never return.
    unsigned e_actual = 0;
    for (unsigned r = 0; r < n_known; ++r)
        if (gf.eval_poly(*msg, params.eval_points[known_pos[r]]) != known_sym[r]) ++e_actual;
    std::size_t dist = subset_distance(rs_encode(params, *msg), received);
    if (2 * e_actual + res.erasures > params.l - params.k ||
        dist > params.l - params.k) {
        res.reason = "re-encode check failed: corrected codeword at subset distance " +
                     std::to_string(dist) + " > " + std::to_string(params.l - params.k);
        return res;
    }
    res.message = std::move(*msg);
    return res;
}

std::string RsDescription::str() const {
    std::ostringstream out;
    out << "type " << type.str() << ", R = " << rate.str();
    if (!seq_bits_exact)
        out << " (idealized " << idealized_rate << " with fractional log2 l)";
    return out.str();
}

RsDescription rs_describe(const RsSubsetParams& params) {
    unsigned m = params.field.m();
    double log2l = params.l == 1 ? 0.0 : std::log2(static_cast<double>(params.l));
    RsDescription d{
        params.code_params(),
        Rational(params.info_bits(),
                 static_cast<long long>(params.l) * params.packet_bits()),
        static_cast<double>(params.info_bits()) / (params.l * (m + log2l)),
        (1u << params.seq_bits) == params.l || params.l == 1,
    };
    return d;
}

RsMessage rs_message_from_index(const RsSubsetParams& params, std::uint64_t index) {
    RsMessage msg(params.k);
    unsigned m = params.field.m();
    for (unsigned i = 0; i < params.k; ++i)
        msg[params.k - 1 - i] = static_cast<std::uint32_t>((index >> (m * i)) & (params.field.order() - 1));
    return msg;
}

std::uint64_t rs_message_to_index(const RsSubsetParams& params, const RsMessage& msg) {
    std::uint64_t index = 0;
    for (unsigned i = 0; i < params.k; ++i)
        index = (index << params.field.m()) | msg[i];
    return index;
}

std::vector<SubsetCodeword> rs_materialize(const RsSubsetParams& params) {
    if (params.info_bits() > 20)
        throw std::invalid_argument("rs_materialize: codebook larger than 2^20");
    std::uint64_t count = std::uint64_t{1} << params.info_bits();
    std::vector<SubsetCodeword> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(rs_encode(params, rs_message_from_index(params, i)));
    return out;
}

}  // namespace subsetcode
