#include "signtope/gf2top.hpp"

#include <algorithm>

#include "signtope/error.hpp"
#include "signtope/gf2.hpp"

namespace signtope {

Gf2ChainComplex::Gf2ChainComplex(const PlainComplex& k, int max_dim, const FaceLimits& limits) : max_dim_(max_dim) {
    if (max_dim < 0) throw InvalidInput("chain complex needs max_dim >= 0");
    bases_ = k.faces(max_dim, limits);
    index_.resize(bases_.size());
    boundaries_.resize(bases_.size());
    for (std::size_t d = 0; d < bases_.size(); ++d) {
        index_[d].reserve(bases_[d].size());
        for (std::size_t i = 0; i < bases_[d].size(); ++i) index_[d].emplace(bases_[d][i], i);
    }
    for (std::size_t d = 1; d < bases_.size(); ++d) {
        auto& cols = boundaries_[d];
        cols.reserve(bases_[d].size());
        Simplex facet;
        for (const auto& s : bases_[d]) {
            Bitset col(bases_[d - 1].size());
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                facet.assign(s.begin(), s.end());
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
                col.set(index_[d - 1].at(facet));
            }
            cols.push_back(std::move(col));
        }
    }
}

const std::vector<Simplex>& Gf2ChainComplex::basis(int d) const {
    static const std::vector<Simplex> kEmpty;
    if (d < 0 || d > top_dim()) {
        if (d > max_dim_) throw InvalidInput("chain complex was not built up to degree " + std::to_string(d));
        return kEmpty;
    }
    return bases_[static_cast<std::size_t>(d)];
}

std::size_t Gf2ChainComplex::size(int d) const noexcept {
    return (d < 0 || d > top_dim()) ? 0 : bases_[static_cast<std::size_t>(d)].size();
}

std::optional<std::size_t> Gf2ChainComplex::index_of(const Simplex& s) const {
    if (s.empty() || static_cast<int>(s.size()) - 1 > top_dim()) return std::nullopt;
    const auto& idx = index_[s.size() - 1];
    if (auto it = idx.find(s); it != idx.end()) return it->second;
    return std::nullopt;
}

const std::vector<Bitset>& Gf2ChainComplex::boundary(int d) const {
    static const std::vector<Bitset> kEmpty;
    if (d <= 0 || d > top_dim()) return kEmpty;
    return boundaries_[static_cast<std::size_t>(d)];
}

bool Gf2ChainComplex::boundary_squared_is_zero() const {
    for (int d = 2; d <= top_dim(); ++d) {
        const auto& lower = boundary(d - 1);
        for (const auto& col : boundary(d)) {
            Bitset acc(size(d - 2));
            col.for_each_set_bit([&](std::size_t i) { acc ^= lower[i]; });
            if (acc.any()) return false;
        }
    }
    return true;
}

std::size_t Gf2ChainComplex::boundary_rank(int d) const {
    if (d == 0) return size(0) > 0 ? 1 : 0;  // augmentation
    if (d < 0 || d > top_dim()) return 0;
    return gf2_rank(boundary(d), size(d - 1));
}

Bitset Gf2ChainComplex::coboundary(int d, const Bitset& c) const {
    if (d + 1 > max_dim_) throw InvalidInput("coboundary needs the chain complex up to degree " + std::to_string(d + 1));
    Bitset out(size(d + 1));
    const auto& cols = boundary(d + 1);
    for (std::size_t t = 0; t < cols.size(); ++t)
        if ((cols[t] & c).count() % 2) out.set(t);
    return out;
}

Bitset Gf2ChainComplex::to_bits(const Cochain& c) const {
    Bitset b(size(c.dim));
    for (const auto& s : c.support) {
        if (static_cast<int>(s.size()) != c.dim + 1) throw InvalidInput("cochain support has a face of the wrong degree");
        auto i = index_of(s);
        if (!i) throw InvalidInput("cochain support contains a non-face");
        b.set(*i);
    }
    return b;
}

Cochain Gf2ChainComplex::from_bits(int d, const Bitset& b) const {
    Cochain c{d, {}};
    b.for_each_set_bit([&](std::size_t i) { c.support.insert(basis(d)[i]); });
    return c;
}

Gf2ChainComplex chain_complex(const PlainComplex& k, int max_dim, const FaceLimits& limits) {
    return Gf2ChainComplex(k, max_dim, limits);
}

std::vector<std::size_t> betti(const PlainComplex& k, int max_dim, const FaceLimits& limits) {
    if (max_dim < 0) max_dim = std::max(k.dimension(), 0);
    Gf2ChainComplex cc(k, max_dim + 1, limits);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(max_dim) + 2);
    for (int d = 0; d <= max_dim + 1; ++d) ranks[static_cast<std::size_t>(d)] = cc.boundary_rank(d);
    std::vector<std::size_t> out(static_cast<std::size_t>(max_dim) + 1);
    for (int d = 0; d <= max_dim; ++d) {
        const auto ud = static_cast<std::size_t>(d);
        out[ud] = cc.size(d) - ranks[ud] - ranks[ud + 1];
    }
    return out;
}

int homological_connectivity(const PlainComplex& k, const FaceLimits& limits) {
    auto b = betti(k, -1, limits);
    for (std::size_t d = 0; d < b.size(); ++d)
        if (b[d] != 0) return static_cast<int>(d) - 1;
    return kAcyclic;
}

namespace {

// Rows of delta_{d-1}: for each (d-1)-face, the d-faces containing it.
std::vector<Bitset> coboundary_rows(const Gf2ChainComplex& cc, int d) {
    std::vector<Bitset> rows(cc.size(d - 1), Bitset(cc.size(d)));
    const auto& cols = cc.boundary(d);
    for (std::size_t t = 0; t < cols.size(); ++t) cols[t].for_each_set_bit([&](std::size_t s) { rows[s].set(t); });
    return rows;
}

bool bits_are_coboundary(const Gf2ChainComplex& cc, int d, const Bitset& c) {
    if (c.none()) return true;
    if (d == 0) return false;
    Gf2Echelon e(cc.size(d));
    for (auto& r : coboundary_rows(cc, d)) e.insert(std::move(r));
    return e.in_span(c);
}

Bitset cup_bits(const Gf2ChainComplex& cc, int p, const Bitset& a, int q, const Bitset& b) {
    const auto& top = cc.basis(p + q);
    Bitset out(top.size());
    Simplex front, back;
    for (std::size_t i = 0; i < top.size(); ++i) {
        const auto& s = top[i];
        front.assign(s.begin(), s.begin() + p + 1);
        back.assign(s.begin() + p, s.end());
        auto fi = cc.index_of(front);
        if (!fi || !a.test(*fi)) continue;
        auto bi = cc.index_of(back);
        if (bi && b.test(*bi)) out.set(i);
    }
    return out;
}

}  // namespace

bool is_cocycle(const PlainComplex& k, const Cochain& c, const FaceLimits& limits) {
    Gf2ChainComplex cc(k, c.dim + 1, limits);
    return cc.coboundary(c.dim, cc.to_bits(c)).none();
}

bool is_coboundary(const PlainComplex& k, const Cochain& c, const FaceLimits& limits) {
    Gf2ChainComplex cc(k, c.dim, limits);
    return bits_are_coboundary(cc, c.dim, cc.to_bits(c));
}

Cochain cup_product(const PlainComplex& k, const Cochain& a, const Cochain& b, const FaceLimits& limits) {
    if (a.dim < 0 || b.dim < 0) throw InvalidInput("cup product: negative degree");
    Gf2ChainComplex cc(k, a.dim + b.dim + 1, limits);
    const Bitset ab = cc.to_bits(a), bb = cc.to_bits(b);
    if (cc.coboundary(a.dim, ab).any() || cc.coboundary(b.dim, bb).any())
        throw InvalidInput("cup product: inputs must be cocycles");
    return cc.from_bits(a.dim + b.dim, cup_bits(cc, a.dim, ab, b.dim, bb));
}

std::vector<Cochain> cohomology_basis(const PlainComplex& k, int d, const FaceLimits& limits) {
    if (d < 0) throw InvalidInput("cohomology degree must be >= 0");
    Gf2ChainComplex cc(k, d + 1, limits);
    const std::size_t n = cc.size(d);
    auto cycles = gf2_nullspace(cc.boundary(d + 1), n);
    Gf2Echelon e(n);
    if (d > 0)
        for (auto& r : coboundary_rows(cc, d)) e.insert(std::move(r));
    std::vector<Cochain> out;
    for (auto& z : cycles)
        if (e.insert(z)) out.push_back(cc.from_bits(d, z));
    return out;
}

SwhResult stiefel_whitney_height(const Z2Complex& k, const FaceLimits& limits) {
    // Cochains of K/Z2 are the tau-invariant cochains of K. Ordering vertices
    // by pair makes tau order-preserving, so the quotient is a Delta-complex
    // whose m-cells are the m-faces of K with a "+" lowest vertex, and no
    // subdivision is needed. w1 is 1 on edges whose endpoint signs differ, so
    // w1^m is 1 exactly on cells whose signs alternate.
    SwhResult r;
    if (k.facets().empty()) throw InvalidInput("swh of the empty complex is undefined");
    auto is_rep = [](const Simplex& s) { return Z2Complex::is_plus(s.front()); };
    for (int m = 1;; ++m) {
        r.degree_checked = static_cast<std::size_t>(m);
        const auto groups = k.complex().faces(m, limits);
        if (static_cast<int>(groups.size()) <= m) break;
        std::unordered_map<Simplex, std::size_t, SimplexHash> lower;
        for (const auto& f : groups[m - 1])
            if (is_rep(f)) lower.emplace(f, lower.size());
        std::vector<Simplex> cells;
        for (const auto& f : groups[m])
            if (is_rep(f)) cells.push_back(f);

        Bitset power(cells.size());
        std::vector<Bitset> delta(lower.size(), Bitset(cells.size()));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Simplex& c = cells[i];
            bool alternating = true;
            for (std::size_t v = 0; v < c.size(); ++v)
                if (Z2Complex::is_plus(c[v]) != (v % 2 == 0)) alternating = false;
            if (alternating) power.set(i);
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                Simplex face;
                for (std::size_t v = 0; v < c.size(); ++v)
                    if (v != drop) face.push_back(c[v]);
                if (!is_rep(face)) face = Z2Complex::antipode(face);
                delta[lower.at(face)].flip(i);
            }
        }
        if (power.none()) break;
        Gf2Echelon image(cells.size());
        for (auto& col : delta) image.insert(std::move(col));
        if (image.in_span(power)) break;
        r.height = static_cast<std::size_t>(m);
    }
    return r;
}

std::size_t swh(const Z2Complex& k, const FaceLimits& limits) { return stiefel_whitney_height(k, limits).height; }

std::vector<std::size_t> join_reduced_betti(const std::vector<std::vector<std::size_t>>& factors, int max_dim) {
    if (max_dim < 0) throw InvalidInput("join_reduced_betti: max_dim must be >= 0");
    const auto len = static_cast<std::size_t>(max_dim) + 1;
    if (factors.empty()) throw InvalidInput("join_reduced_betti: no factors");
    // Reduced Poincare polynomials multiply, with one degree shift per join.
    std::vector<std::size_t> acc = factors.front();
    acc.resize(len, 0);
    for (std::size_t f = 1; f < factors.size(); ++f) {
        std::vector<std::size_t> next(len, 0);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = 0; j < factors[f].size() && i + j + 1 < len; ++j)
                next[i + j + 1] += acc[i] * factors[f][j];
        acc = std::move(next);
    }
    return acc;
}

}  // namespace signtope
