#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "signtope/error.hpp"
#include "signtope/gf2top.hpp"
#include "signtope/vrcube.hpp"

using namespace signtope;

namespace {

unsigned dist(Vertex a, Vertex b) { return static_cast<unsigned>(__builtin_popcount(a ^ b)); }

bool diameter_at_most(const Simplex& s, unsigned k) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (dist(s[i], s[j]) > k) return false;
    return true;
}

// Maximal cliques of the distance <= k graph by scanning every vertex subset.
std::set<Simplex> cliques_by_subsets(unsigned n, unsigned k) {
    const std::uint32_t nv = 1U << n;
    std::vector<Simplex> cliques;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << nv); ++m) {
        Simplex s;
        for (Vertex v = 0; v < nv; ++v)
            if (m >> v & 1U) s.push_back(v);
        if (diameter_at_most(s, k)) cliques.push_back(s);
    }
    std::set<Simplex> out;
    for (const auto& s : cliques) {
        bool maximal = true;
        for (Vertex v = 0; v < nv && maximal; ++v) {
            if (std::find(s.begin(), s.end(), v) != s.end()) continue;
            Simplex t = s;
            t.push_back(v);
            if (diameter_at_most(t, k)) maximal = false;
        }
        if (maximal) out.insert(s);
    }
    return out;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpq_class frac(const mpz_class& num, const mpz_class& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// Independent t scan for Eq. (5) in double precision.
unsigned choose_t_scan(unsigned k) {
    unsigned best = 1;
    for (unsigned t = 2; t <= 4 * k + 8; ++t)
        if (static_cast<double>(k) > t / 2.0 + 2.0 * std::sqrt(t * std::log(static_cast<double>(t)))) best = t;
    return best;
}

std::vector<std::size_t> trimmed(std::vector<std::size_t> b) {
    while (!b.empty() && b.back() == 0) b.pop_back();
    return b;
}

}  // namespace

TEST_CASE("cube faces") {
    CHECK(cube_faces(3, 2).size() == 6);
    CHECK(cube_faces(3, 1).size() == 12);
    CHECK(cube_faces(4, 2).size() == 24);
    CHECK(cube_faces(3, 3).size() == 1);
    CHECK(cube_faces(3, 0).size() == 8);
    for (const auto& f : cube_faces(4, 2)) {
        CHECK(f.dimension() == 2);
        const auto vs = f.vertices();
        CHECK(vs.size() == 4);
        for (Vertex v : vs) CHECK((v & ~f.free_mask) == f.fixed_values);
    }
}

TEST_CASE("maximal cliques match subset enumeration") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const auto got = hamming_cliques(n, k);
            CHECK(std::set<Simplex>(got.begin(), got.end()) == cliques_by_subsets(n, k));
        }
}

TEST_CASE("VR face test on small subsets") {
    for (unsigned n = 2; n <= 5; ++n)
        for (unsigned k = 1; k < n; ++k) {
            const auto vr = vr_cube(n, k);
            const Vertex nv = 1U << n;
            for (Vertex a = 0; a < nv; ++a)
                for (Vertex b = a + 1; b < nv; ++b) {
                    CHECK(vr.plain.contains({a, b}) == (dist(a, b) <= k));
                    for (Vertex c = b + 1; c < nv; c += 3) {
                        CHECK(vr.plain.contains({a, b, c}) == diameter_at_most({a, b, c}, k));
                        const Vertex d = (c + 5) % nv;
                        if (d > c) CHECK(vr.plain.contains({a, b, c, d}) == diameter_at_most({a, b, c, d}, k));
                    }
                }
        }
}

TEST_CASE("VR identities") {
    const auto v22 = vr_cube(2, 2);
    CHECK_FALSE(v22.is_free());
    CHECK(v22.plain.facets() == std::vector<Simplex>{{0, 1, 2, 3}});
    CHECK(trimmed(betti(v22.plain)).empty());

    const auto v32 = vr_cube(3, 2);
    REQUIRE(v32.is_free());
    CHECK(equivariant_isomorphic(*v32.equivariant, crosspolytope_boundary(4)).isomorphic);
    CHECK(betti(v32.plain) == std::vector<std::size_t>{0, 0, 0, 1});

    const auto v31 = vr_cube(3, 1);
    CHECK(v31.plain.f_vector() == std::vector<std::size_t>{8, 12});
    for (unsigned n = 3; n <= 4; ++n) {
        const auto b = betti(vr_cube(n, 1).plain);
        CHECK(b[1] == n * (std::size_t{1} << (n - 1)) - (std::size_t{1} << n) + 1);
    }
    for (unsigned n = 2; n <= 4; ++n) {
        const auto v = vr_cube(n, n - 1);
        REQUIRE(v.is_free());
        CHECK(equivariant_isomorphic(*v.equivariant, crosspolytope_boundary(std::size_t{1} << (n - 1))).isomorphic);
    }
    // Involution: pair j is {x, ~x} with x the smaller.
    const auto v41 = vr_cube(4, 1);
    REQUIRE(v41.is_free());
    CHECK(v41.equivariant->n_pairs() == 8);
    for (const auto& f : v41.equivariant->facets()) {
        Simplex cube_ids;
        for (Vertex v : f) {
            const Vertex x = static_cast<Vertex>(Z2Complex::pair_of(v));
            cube_ids.push_back(Z2Complex::is_plus(v) ? x : (15U ^ x));
        }
        std::sort(cube_ids.begin(), cube_ids.end());
        CHECK(v41.plain.contains(cube_ids));
    }
    CHECK_THROWS_AS(vr_cube(8, 1), CapExceeded);
}

TEST_CASE("hypercube skeleton triangulation") {
    for (unsigned n = 2; n <= 3; ++n) CHECK(trimmed(betti(hypercube_skeleton_triangulated(n, n).plain)).empty());
    CHECK(betti(hypercube_skeleton_triangulated(3, 1).plain) == std::vector<std::size_t>{0, 5});
    CHECK(trimmed(betti(hypercube_skeleton_triangulated(3, 2).plain)) == std::vector<std::size_t>{0, 0, 1});
    // Each t-face contributes t! maximal chains.
    CHECK(hypercube_skeleton_triangulated(3, 2).plain.facets().size() == 12);
    CHECK(hypercube_skeleton_triangulated(4, 3).plain.facets().size() == 8 * 6);
    const auto s = hypercube_skeleton_triangulated(4, 2);
    CHECK(s.is_free());
}

TEST_CASE("VR^t subcomplex") {
    for (unsigned n : {3U, 4U})
        for (unsigned k = 1; k < n; ++k) CHECK(vr_t_subcomplex(n, k, n).plain == vr_cube(n, k).plain);
    CHECK(vr_t_subcomplex(3, 2, 1).plain.f_vector() == std::vector<std::size_t>{8, 12});
    const auto v422 = vr_t_subcomplex(4, 2, 2);
    CHECK(v422.plain.facets().size() == 24);
    for (const auto& f : v422.plain.facets()) CHECK(f.size() == 4);
    // Monotone in t.
    for (unsigned t = 1; t < 4; ++t) {
        const auto lo = vr_t_subcomplex(4, 2, t).plain;
        const auto hi = vr_t_subcomplex(4, 2, t + 1).plain;
        for (const auto& f : lo.facets()) CHECK(hi.contains(f));
    }
}

TEST_CASE("face cover nerve") {
    const auto n32 = face_cover_nerve(3, 2, 2);
    CHECK(n32.n_vertices() == 6);
    // Opposite squares are exactly the non-adjacent pairs: the octahedron.
    CHECK(n32.f_vector() == std::vector<std::size_t>{6, 12, 8});
    CHECK(trimmed(betti(n32)) == std::vector<std::size_t>{0, 0, 1});
    const auto n21 = face_cover_nerve(2, 1, 1);
    CHECK(n21.f_vector() == std::vector<std::size_t>{4, 4});
    CHECK(betti(n21) == std::vector<std::size_t>{0, 1});
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned t = 1; t <= n; ++t)
            CHECK(trimmed(betti(face_cover_nerve(n, 1, t))) == trimmed(betti(hypercube_skeleton_triangulated(n, t).plain)));
}

TEST_CASE("alpha") {
    CHECK(alpha(3, 2) == 4);
    CHECK(alpha(4, 2) == frac(8, 5));
    for (unsigned n = 2; n <= 12; ++n) {
        CHECK(alpha(n, n - 1) == mpq_class(mpz_class(1) << (n - 1)));
        for (unsigned k = 0; k < n; ++k) {
            mpz_class tail = 0;
            for (unsigned i = k + 1; i <= n; ++i) tail += binomial(n, i);
            CHECK(alpha(n, k) == frac(mpz_class(1) << (n - 1), tail));
        }
    }
    CHECK_THROWS_AS(alpha(3, 3), InvalidInput);
}

TEST_CASE("choose_t") {
    CHECK(choose_t(5) == 2);
    CHECK(choose_t(20) == 14);
    for (unsigned k = 2; k <= 200; ++k) {
        CHECK(choose_t(k) == choose_t_scan(k));
        CHECK(choose_t(k + 1) >= choose_t(k));
    }
}

TEST_CASE("tail inequality") {
    const auto empty = tail_inequality_check(14, 20);
    CHECK(empty.holds);
    CHECK(empty.margins.empty());

    const auto art = tail_inequality_check(14, 8);
    CHECK(art.margins.size() == 6);
    bool all = true;
    for (const auto& m : art.margins) {
        CHECK(m.alpha == alpha(m.t_prime, 8));
        CHECK(m.margin == m.alpha - 15);
        all = all && m.margin >= 0;
    }
    CHECK(art.holds == all);

    const auto c = tail_inequality_check(30, 20);
    CHECK(c.margins.size() == 10);
    const auto it = std::find_if(c.margins.begin(), c.margins.end(), [](const TailMargin& m) { return m.t_prime == 25; });
    REQUIRE(it != c.margins.end());
    mpz_class tail = 0;
    for (unsigned i = 21; i <= 25; ++i) tail += binomial(25, i);
    const mpq_class a25 = frac(mpz_class(1) << 24, tail);
    CHECK(it->alpha == a25);
    CHECK((it->margin >= 0) == (a25 >= 31));
    CHECK(a25 >= 31);
    CHECK_THROWS_AS(tail_inequality_check(41, 20), CapExceeded);
}

TEST_CASE("VR Betti via the join decomposition") {
    for (unsigned n = 2; n <= 4; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const auto direct = betti(vr_cube(n, k).plain, 4);
            auto d = direct;
            d.resize(5, 0);
            CHECK(vr_reduced_betti(n, k, 4) == d);
        }
    // Sphere S^{2^{n-1}-1} for k = n-1.
    const auto b = vr_reduced_betti(5, 4, 16);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == (i == 15 ? 1U : 0U));
}

TEST_CASE("homological connectivity bound on VR") {
    for (unsigned n = 2; n <= 5; ++n)
        for (unsigned k = 1; k < n; ++k) {
            const mpq_class a = alpha(n, k);
            if (a < 2) continue;
            const int top = static_cast<int>(mpz_class(a.get_num() / a.get_den()).get_si()) - 2;
            for (auto x : vr_reduced_betti(n, k, top)) CHECK(x == 0);
        }
}
