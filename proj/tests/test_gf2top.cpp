#include <doctest.h>

#include <algorithm>
#include <random>

#include "signtope/error.hpp"
#include "signtope/gf2top.hpp"
#include "signtope/signcomplex.hpp"
#include "signtope/simplicial.hpp"

using namespace signtope;

namespace {

using Betti = std::vector<std::size_t>;

// Direct join: facets f + shifted g.
PlainComplex join(const PlainComplex& x, const PlainComplex& y) {
    const auto shift = static_cast<Vertex>(x.n_vertices());
    std::vector<Simplex> gens;
    for (const auto& f : x.facets())
        for (const auto& g : y.facets()) {
            Simplex s = f;
            for (Vertex v : g) s.push_back(v + shift);
            gens.push_back(s);
        }
    return {x.n_vertices() + y.n_vertices(), gens};
}

Betti padded(const PlainComplex& k, int max_dim) {
    Betti b = betti(k, max_dim);
    b.resize(static_cast<std::size_t>(max_dim) + 1, 0);
    return b;
}

// Largest m with w^m not a coboundary, using the quotient triangulation and
// repeated cup products.
std::size_t swh_by_quotient(const Z2Complex& k) {
    const auto q = quotient(k);
    const Cochain w = q.cover_cocycle;
    if (is_coboundary(q.complex, w)) return 0;
    Cochain power = w;
    std::size_t m = 1;
    while (static_cast<int>(m + 1) <= q.complex.dimension()) {
        power = cup_product(q.complex, power, w);
        if (is_coboundary(q.complex, power)) break;
        ++m;
    }
    return m;
}

Cochain vertex_cochain(std::vector<Simplex> support) {
    Cochain c;
    c.dim = 0;
    c.support.insert(support.begin(), support.end());
    return c;
}

}  // namespace

TEST_CASE("chain complex boundaries") {
    const PlainComplex triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    const auto cc = chain_complex(triangle, 1);
    CHECK(cc.size(0) == 3);
    CHECK(cc.size(1) == 3);
    CHECK(cc.boundary_rank(1) == 2);
    for (const auto& col : cc.boundary(1)) CHECK(col.count() == 2);
    const PlainComplex tet(4, {{0, 1, 2, 3}});
    CHECK(chain_complex(tet, 3).boundary_squared_is_zero());
    const auto oct = chain_complex(crosspolytope_boundary(3).complex(), 2);
    CHECK(oct.size(0) == 6);
    CHECK(oct.size(1) == 12);
    CHECK(oct.size(2) == 8);
    CHECK(oct.boundary_squared_is_zero());
    CHECK(chain_complex(crosspolytope_boundary(5).complex(), 4).boundary_squared_is_zero());
    FaceLimits tiny;
    tiny.max_faces = 10;
    CHECK_THROWS_AS(chain_complex(crosspolytope_boundary(4).complex(), 3, tiny), CapExceeded);
}

TEST_CASE("reduced Betti numbers") {
    CHECK(betti(crosspolytope_boundary(4).complex()) == Betti{0, 0, 0, 1});
    CHECK(betti(PlainComplex(4, {{0, 1, 2, 3}})) == Betti{0, 0, 0, 0});
    CHECK(betti(crosspolytope_boundary(1).complex()) == Betti{1});
    // Cube graph.
    std::vector<Simplex> edges;
    for (Vertex x = 0; x < 8; ++x)
        for (int i = 0; i < 3; ++i)
            if (!(x >> i & 1U)) edges.push_back({x, x | (1U << i)});
    CHECK(betti(PlainComplex(8, edges)) == Betti{0, 5});
    // Torus (7-vertex) mod 2: (0, 2, 1).
    const PlainComplex torus(7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {0, 4, 5}, {1, 5, 6}, {0, 2, 6},
                                 {0, 1, 5}, {1, 2, 6}, {0, 2, 3}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6}, {0, 4, 6}});
    CHECK(betti(torus) == Betti{0, 2, 1});
    CHECK(betti(rp2_six_vertex()) == Betti{0, 1, 1});
}

TEST_CASE("homological connectivity") {
    CHECK(homological_connectivity(crosspolytope_boundary(4).complex()) == 2);
    CHECK(homological_connectivity(crosspolytope_boundary(1).complex()) == -1);
    CHECK(homological_connectivity(crosspolytope_boundary(3).complex()) == 1);
    CHECK(homological_connectivity(PlainComplex(3, {{0, 1, 2}})) == kAcyclic);
}

TEST_CASE("join Betti numbers match a direct computation") {
    const std::vector<PlainComplex> pieces{
        crosspolytope_boundary(1).complex(), crosspolytope_boundary(2).complex(), PlainComplex(3, {{0}, {1}, {2}}),
        PlainComplex(2, {{0, 1}}), PlainComplex(4, {{0, 1}, {1, 2}, {2, 0}, {3}})};
    const int max_dim = 4;
    for (const auto& x : pieces)
        for (const auto& y : pieces) {
            const auto direct = padded(join(x, y), max_dim);
            const auto combined = join_reduced_betti({padded(x, max_dim), padded(y, max_dim)}, max_dim);
            CHECK(combined == direct);
        }
    // S0 * S0 * S0 = octahedron.
    const Betti s0 = padded(crosspolytope_boundary(1).complex(), 3);
    CHECK(join_reduced_betti({s0, s0, s0}, 3) == Betti{0, 0, 1, 0});
    CHECK_THROWS_AS(join_reduced_betti({}, 2), InvalidInput);
}

TEST_CASE("cocycles, coboundaries and cohomology bases") {
    const auto t = rp2_six_vertex();
    const auto h1 = cohomology_basis(t, 1);
    REQUIRE(h1.size() == 1);
    CHECK(is_cocycle(t, h1.front()));
    CHECK_FALSE(is_coboundary(t, h1.front()));
    CHECK(cohomology_basis(t, 2).size() == 1);
    CHECK(cohomology_basis(crosspolytope_boundary(3).complex(), 1).empty());
    // delta of a vertex cochain is a coboundary.
    const auto cc = chain_complex(t, 1);
    Bitset v(cc.size(0));
    v.set(2);
    const Cochain dv = cc.from_bits(1, cc.coboundary(0, v));
    CHECK(is_cocycle(t, dv));
    CHECK(is_coboundary(t, dv));
    CHECK_FALSE(is_coboundary(t, vertex_cochain({{0}})));
}

TEST_CASE("cup products") {
    const auto t = rp2_six_vertex();
    const Cochain a = cohomology_basis(t, 1).front();
    const Cochain aa = cup_product(t, a, a);
    CHECK(aa.dim == 2);
    CHECK(is_cocycle(t, aa));
    CHECK_FALSE(is_coboundary(t, aa));
    Cochain zero;
    zero.dim = 1;
    CHECK(cup_product(t, zero, a).support.empty());
    std::vector<Simplex> all_vertices;
    for (Vertex x = 0; x < 6; ++x) all_vertices.push_back({x});
    const Cochain unit = vertex_cochain(all_vertices);
    CHECK(cup_product(t, unit, a) == a);
    CHECK(cup_product(t, a, unit) == a);
    // Changing a by a coboundary changes a^2 by a coboundary.
    const auto cc = chain_complex(t, 2);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Bitset v(cc.size(0));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (rng() & 1U) v.set(i);
        const Bitset a2 = cc.to_bits(a) ^ cc.coboundary(0, v);
        const Cochain b = cc.from_bits(1, a2);
        const Cochain bb = cup_product(t, b, b);
        const Bitset diff = cc.to_bits(aa) ^ cc.to_bits(bb);
        CHECK(is_coboundary(t, cc.from_bits(2, diff)));
    }
    Cochain bad;
    bad.dim = 1;
    bad.support.insert(cc.basis(1).front());
    CHECK_THROWS_AS(cup_product(t, bad, a), InvalidInput);
}

TEST_CASE("Stiefel-Whitney height on spheres and RP2") {
    for (std::size_t d = 1; d <= 5; ++d) CHECK(swh(crosspolytope_boundary(d)) == d - 1);
    const auto t = rp2_six_vertex();
    const auto lift = lift_double_cover(t, cohomology_basis(t, 1).front());
    CHECK(swh(lift.complex) == 2);
    // Two disjoint edges swapped by the involution: the cover is trivial.
    CHECK(swh(Z2Complex(2, {{Z2Complex::plus(0), Z2Complex::plus(1)}})) == 0);
    CHECK_THROWS_AS(swh(Z2Complex()), InvalidInput);
}

TEST_CASE("Stiefel-Whitney height agrees with the quotient and cup product oracle") {
    std::vector<Z2Complex> ks{crosspolytope_boundary(1), crosspolytope_boundary(2), crosspolytope_boundary(3),
                              crosspolytope_boundary(4), sign_complex(hadamard(1)), sign_complex(hadamard(2)),
                              sign_complex(parse_matrix("3 4\n+-*+\n*++-\n-*-+\n")),
                              sign_complex(pg_random_partial(2, 1)),
                              sign_complex(pg_random_partial(3, 5))};
    for (std::uint64_t s = 1; s <= 8; ++s) ks.push_back(sign_complex(random_total(3, 4, s)));
    const auto t = rp2_six_vertex();
    ks.push_back(lift_double_cover(t, cohomology_basis(t, 1).front()).complex);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        CAPTURE(i);
        CHECK(swh(ks[i]) == swh_by_quotient(ks[i]));
    }
}
