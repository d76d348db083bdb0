#include "signtope/vrcube.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signtope/error.hpp"
#include "signtope/gf2top.hpp"
#include "signtope/signmat.hpp"

namespace signtope {

std::vector<Vertex> CubeFace::vertices() const {
    std::vector<Vertex> out;
    // Enumerate submasks of free_mask in increasing order.
    std::uint32_t sub = 0;
    do {
        out.push_back(fixed_values | sub);
        sub = (sub - free_mask) & free_mask;
    } while (sub != 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CubeFace> cube_faces(unsigned n, unsigned t) {
    if (t > n) throw InvalidInput("cube face dimension exceeds n");
    if (n > 20) throw CapExceeded("cube_faces: n > 20");
    std::vector<CubeFace> out;
    const std::uint32_t all = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t mask = 0; mask <= all; ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != t) continue;
        const std::uint32_t fixed = all & ~mask;
        std::uint32_t a = 0;
        do {
            out.push_back({mask, a});
            a = (a - fixed) & fixed;
        } while (a != 0);
    }
    std::sort(out.begin(), out.end(), [](const CubeFace& x, const CubeFace& y) {
        return x.free_mask != y.free_mask ? x.free_mask < y.free_mask : x.fixed_values < y.fixed_values;
    });
    return out;
}

namespace {

void check_n(unsigned n, const CubeLimits& limits) {
    if (n < 1) throw InvalidInput("hypercube dimension must be >= 1");
    if (n > limits.max_n) throw CapExceeded("hypercube dimension " + std::to_string(n) + " exceeds cap " + std::to_string(limits.max_n));
}

// Maximal cliques of the distance <= k graph restricted to `allowed`.
std::vector<Simplex> cliques_within(unsigned n, unsigned k, const Bitset& allowed) {
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Bitset> nbr(dim, Bitset(dim));
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y)
            if (x != y && hamming(x, y) <= k) nbr[x].set(y);

    std::vector<Simplex> out;
    Simplex r;
    auto bk = [&](auto&& self, Bitset p, Bitset x) -> void {
        if (p.none()) {
            if (x.none()) out.push_back(r);
            return;
        }
        // Pivot maximizing |P & N(u)| over P | X.
        std::size_t pivot = 0, best = 0;
        bool have = false;
        (p | x).for_each_set_bit([&](std::size_t u) {
            std::size_t c = (p & nbr[u]).count();
            if (!have || c > best) pivot = u, best = c, have = true;
        });
        Bitset cand = p;
        nbr[pivot].for_each_set_bit([&](std::size_t v) { cand.reset(v); });
        cand.for_each_set_bit([&](std::size_t v) {
            r.push_back(static_cast<Vertex>(v));
            self(self, p & nbr[v], x & nbr[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        });
    };
    bk(bk, allowed, Bitset(dim));
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

Bitset all_vertices(unsigned n) {
    const std::size_t dim = std::size_t{1} << n;
    Bitset b(dim);
    for (std::size_t i = 0; i < dim; ++i) b.set(i);
    return b;
}

std::optional<Z2Complex> antipodal_z2(unsigned n, const PlainComplex& plain) {
    const std::size_t dim = std::size_t{1} << n;
    const auto all = static_cast<Vertex>(dim - 1);
    for (const auto& f : plain.facets())
        for (Vertex v : f)
            if (std::binary_search(f.begin(), f.end(), all ^ v)) return std::nullopt;
    std::vector<Vertex> inv(dim);
    for (Vertex x = 0; x < dim; ++x) inv[x] = all ^ x;
    return Z2Complex::from_involution(dim, plain.facets(), inv);
}

CubeComplex make_cube_complex(unsigned n, std::vector<Simplex> facets) {
    CubeComplex c;
    c.n = n;
    c.plain = PlainComplex(std::size_t{1} << n, std::move(facets));
    c.equivariant = antipodal_z2(n, c.plain);
    return c;
}

}  // namespace

std::vector<Simplex> hamming_cliques(unsigned n, unsigned k) { return cliques_within(n, k, all_vertices(n)); }

CubeComplex vr_cube(unsigned n, unsigned k, const CubeLimits& limits) {
    check_n(n, limits);
    if (k < 1) throw InvalidInput("vr_cube requires k >= 1");
    return make_cube_complex(n, hamming_cliques(n, k));
}

CubeComplex hypercube_skeleton_triangulated(unsigned n, unsigned t, const CubeLimits& limits) {
    check_n(n, limits);
    if (t > n) throw InvalidInput("skeleton dimension t exceeds n");
    std::vector<Simplex> chains;
    for (const auto& face : cube_faces(n, t)) {
        std::vector<unsigned> coords;
        for (unsigned i = 0; i < n; ++i)
            if ((face.free_mask >> i) & 1U) coords.push_back(i);
        // Each order of switching on the free coordinates is a maximal chain.
        do {
            Simplex chain{face.fixed_values};
            Vertex cur = face.fixed_values;
            for (unsigned i : coords) chain.push_back(cur |= (Vertex{1} << i));
            chains.push_back(std::move(chain));
        } while (std::next_permutation(coords.begin(), coords.end()));
    }
    return make_cube_complex(n, std::move(chains));
}

CubeComplex vr_t_subcomplex(unsigned n, unsigned k, unsigned t, const CubeLimits& limits) {
    check_n(n, limits);
    if (k < 1) throw InvalidInput("vr_t_subcomplex requires k >= 1");
    if (t > n) throw InvalidInput("vr_t_subcomplex: t exceeds n");
    // Cliques of VR(Q_t,k), transported into every t-face.
    const auto local = hamming_cliques(t, k);
    std::vector<Simplex> gens;
    for (const auto& face : cube_faces(n, t)) {
        std::vector<unsigned> coords;
        for (unsigned i = 0; i < n; ++i)
            if ((face.free_mask >> i) & 1U) coords.push_back(i);
        for (const auto& c : local) {
            Simplex s;
            for (Vertex y : c) {
                Vertex x = face.fixed_values;
                for (std::size_t b = 0; b < coords.size(); ++b)
                    if ((y >> b) & 1U) x |= Vertex{1} << coords[b];
                s.push_back(x);
            }
            gens.push_back(std::move(s));
        }
    }
    return make_cube_complex(n, std::move(gens));
}

PlainComplex face_cover_nerve(unsigned n, unsigned k, unsigned t, const CubeLimits& limits) {
    check_n(n, limits);
    if (k < 1) throw InvalidInput("face_cover_nerve requires k >= 1");
    std::vector<Simplex> cover;
    for (const auto& face : cube_faces(n, t)) cover.push_back(face.vertices());
    return nerve(cover);
}

std::vector<std::size_t> vr_reduced_betti(unsigned n, unsigned k, int max_degree, const FaceLimits& limits,
                                          const CubeLimits& cube_limits) {
    check_n(n, cube_limits);
    if (k < 1) throw InvalidInput("vr_reduced_betti requires k >= 1");
    if (max_degree < 0) throw InvalidInput("vr_reduced_betti: max_degree must be >= 0");
    const std::size_t dim = std::size_t{1} << n;
    // Components of the complement graph (distance > k).
    std::vector<int> comp(dim, -1);
    int n_comp = 0;
    for (std::size_t s = 0; s < dim; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = n_comp;
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < dim; ++v)
                if (comp[v] < 0 && hamming(u, v) > k) comp[v] = n_comp, stack.push_back(v);
        }
        ++n_comp;
    }
    std::vector<std::vector<std::size_t>> factors;
    for (int c = 0; c < n_comp; ++c) {
        Bitset members(dim);
        for (std::size_t v = 0; v < dim; ++v)
            if (comp[v] == c) members.set(v);
        // Each factor is a full join summand; the total degree bounds its own.
        PlainComplex factor(dim, cliques_within(n, k, members));
        factors.push_back(betti(factor, max_degree, limits));
    }
    return join_reduced_betti(factors, max_degree);
}

mpq_class alpha(unsigned n, unsigned k) {
    if (k >= n) throw InvalidInput("alpha requires k < n");
    mpz_class tail = 0, binom;
    for (unsigned i = k + 1; i <= n; ++i) {
        mpz_bin_uiui(binom.get_mpz_t(), n, i);
        tail += binom;
    }
    mpz_class num = 1;
    num <<= (n - 1);
    mpq_class a(num, tail);
    a.canonicalize();
    return a;
}

unsigned choose_t(unsigned k) {
    if (k < 2) throw InvalidInput("choose_t requires k >= 2");
    auto rhs = [](unsigned t) {
        const double td = t;
        return td / 2.0 + 2.0 * std::sqrt(td * std::log(td));
    };
    // rhs is increasing for t >= 2 and rhs(t) >= t/2, so t < 2k bounds the scan.
    unsigned best = 1;
    for (unsigned t = 2; t <= 2 * k + 2; ++t)
        if (static_cast<double>(k) > rhs(t)) best = t;
    return best;
}

TailCheck tail_inequality_check(unsigned t, unsigned k) {
    if (t > 40) throw CapExceeded("tail_inequality_check: t > 40");
    TailCheck out;
    const mpq_class need = t + 1;
    for (unsigned tp = k + 1; tp <= t; ++tp) {
        if (tp < 2) continue;
        TailMargin m;
        m.t_prime = tp;
        m.alpha = alpha(tp, k);
        m.margin = m.alpha - need;
        if (m.margin < 0) out.holds = false;
        out.margins.push_back(std::move(m));
    }
    return out;
}

}  // namespace signtope
