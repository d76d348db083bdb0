#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "signtope/error.hpp"
#include "signtope/gf2top.hpp"
#include "signtope/simplicial.hpp"

using namespace signtope;

namespace {

// All nonempty faces by brute force over subsets of each facet.
std::set<Simplex> all_faces(const PlainComplex& k) {
    std::set<Simplex> out;
    for (const auto& f : k.facets())
        for (std::uint32_t m = 1; m < (1U << f.size()); ++m) {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (m >> i & 1U) s.push_back(f[i]);
            out.insert(s);
        }
    return out;
}

std::size_t count_edges(const PlainComplex& k) {
    std::size_t e = 0;
    for (const auto& s : all_faces(k)) e += s.size() == 2;
    return e;
}

bool is_cycle_graph(const PlainComplex& k, std::size_t len) {
    if (k.dimension() != 1 || k.facets().size() != len) return false;
    std::map<Vertex, int> deg;
    for (const auto& e : k.facets())
        for (Vertex v : e) ++deg[v];
    if (deg.size() != len) return false;
    for (auto [v, d] : deg)
        if (d != 2) return false;
    return betti(k) == std::vector<std::size_t>{0, 1};
}

Z2Complex octahedron() { return crosspolytope_boundary(3); }

}  // namespace

TEST_CASE("maximal_elements and subfaces") {
    CHECK(is_subface({1, 3}, {0, 1, 2, 3}));
    CHECK_FALSE(is_subface({1, 4}, {0, 1, 2, 3}));
    const auto m = maximal_elements({{0, 1}, {1}, {0, 1}, {2}, {1, 2, 3}}, 4);
    CHECK(m == std::vector<Simplex>{{1, 2, 3}, {0, 1}});
    PlainComplex k(4, {{0, 1}, {1}, {0, 1, 2}});
    CHECK(k.facets().size() == 1);
    CHECK(k.dimension() == 2);
    CHECK(k.contains({0, 2}));
    CHECK_FALSE(k.contains({3}));
    CHECK_THROWS_AS(PlainComplex(2, {{0, 2}}), InvalidInput);
    CHECK(PlainComplex().dimension() == -1);
}

TEST_CASE("face enumeration matches brute force") {
    const PlainComplex k(6, {{0, 1, 2, 3}, {2, 3, 4}, {4, 5}, {0, 5}});
    const auto faces = k.faces();
    std::set<Simplex> flat;
    for (const auto& group : faces)
        for (const auto& s : group) flat.insert(s);
    CHECK(flat == all_faces(k));
    for (std::size_t d = 0; d < faces.size(); ++d) {
        CHECK(std::is_sorted(faces[d].begin(), faces[d].end()));
        for (const auto& s : faces[d]) CHECK(s.size() == d + 1);
    }
    CHECK(k.f_vector() == std::vector<std::size_t>{6, 10, 5, 1});
    CHECK(k.f_vector(1) == std::vector<std::size_t>{6, 10});
    FaceLimits tight;
    tight.max_faces = 5;
    CHECK_THROWS_AS(k.faces(-1, tight), CapExceeded);
}

TEST_CASE("crosspolytope boundary") {
    const auto s0 = crosspolytope_boundary(1);
    CHECK(s0.facets().size() == 2);
    CHECK(s0.dimension() == 0);
    CHECK(is_cycle_graph(crosspolytope_boundary(2).complex(), 4));
    const auto oct = octahedron();
    CHECK(oct.facets().size() == 8);
    CHECK(oct.complex().f_vector() == std::vector<std::size_t>{6, 12, 8});
    for (std::size_t d = 1; d <= 7; ++d) {
        std::size_t pow3 = 1;
        for (std::size_t i = 0; i < d; ++i) pow3 *= 3;
        std::size_t total = 0;
        for (auto c : crosspolytope_boundary(d).complex().f_vector()) total += c;
        CHECK(total == pow3 - 1);
    }
    CHECK_THROWS_AS(crosspolytope_boundary(0), InvalidInput);
}

TEST_CASE("no face of a Z2 complex holds an antipodal pair") {
    for (const auto& k : {octahedron(), deleted_join_simplex(4), crosspolytope_boundary(4)})
        for (const auto& s : all_faces(k.complex()))
            for (Vertex v : s) CHECK(std::find(s.begin(), s.end(), Z2Complex::antipode(v)) == s.end());
    CHECK_THROWS_AS(Z2Complex(2, {{0, 1}}), InvalidInput);
}

TEST_CASE("Z2 complex closes generators under the involution") {
    const Z2Complex k(2, {{Z2Complex::plus(0), Z2Complex::plus(1)}});
    CHECK(k.facets().size() == 2);
    CHECK(k.contains({Z2Complex::minus(0), Z2Complex::minus(1)}));
    CHECK(Z2Complex::label(Z2Complex::minus(2)) == "3-");
    CHECK(Z2Complex::antipode(Simplex{0, 3}) == Simplex{1, 2});
}

TEST_CASE("from_involution relabels orbits") {
    // Square 0-1-2-3 with involution v -> v+2 mod 4.
    std::vector<Vertex> relabel;
    const auto k = Z2Complex::from_involution(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {2, 3, 0, 1}, &relabel);
    CHECK(k.n_pairs() == 2);
    CHECK(equivariant_isomorphic(k, crosspolytope_boundary(2)).isomorphic);
    CHECK(relabel[0] == Z2Complex::plus(0));
    CHECK(relabel[2] == Z2Complex::minus(0));
    CHECK_THROWS_AS(Z2Complex::from_involution(2, {{0}}, {0, 1}), InvalidInput);
    CHECK_THROWS_AS(Z2Complex::from_involution(3, {{0}}, {1, 2, 0}), InvalidInput);
}

TEST_CASE("deleted join of simplices is the crosspolytope") {
    for (std::size_t d = 1; d <= 4; ++d) {
        const auto r = equivariant_isomorphic(deleted_join_simplex(d), crosspolytope_boundary(d));
        CHECK(r.isomorphic);
        CHECK(r.witness.size() == 2 * d);
    }
    CHECK(deleted_join_simplex(1).facets().size() == 2);
    CHECK(is_cycle_graph(deleted_join_simplex(2).complex(), 4));
}

TEST_CASE("skeleton") {
    const PlainComplex tet(4, {{0, 1, 2, 3}});
    const auto k4 = skeleton(tet, 1);
    CHECK(k4.facets().size() == 6);
    CHECK(k4.dimension() == 1);
    CHECK(skeleton(octahedron(), 2) == octahedron());
    const auto oct1 = skeleton(octahedron(), 1);
    CHECK(oct1.facets().size() == 12);
    CHECK(skeleton(tet, 0).facets().size() == 4);
    CHECK_THROWS_AS(skeleton(tet, -1), InvalidInput);
}

TEST_CASE("order complex and barycentric subdivision") {
    CHECK(order_complex(FacePoset{{{0}, {1}, {2}}}).facets().size() == 3);
    const auto chain = order_complex(FacePoset{{{0}, {0, 1}, {0, 1, 2}}});
    CHECK(chain.facets() == std::vector<Simplex>{{0, 1, 2}});
    const PlainComplex edge(2, {{0, 1}});
    const auto sd_edge = barycentric_subdivision(edge);
    CHECK(sd_edge.facets().size() == 2);
    CHECK(count_edges(sd_edge) == 2);
    CHECK(betti(sd_edge) == std::vector<std::size_t>{0, 0});
    CHECK(order_complex(face_poset(edge)) == sd_edge);
    const auto sd_sq = barycentric_subdivision(crosspolytope_boundary(2));
    CHECK(is_cycle_graph(sd_sq.complex(), 8));
    CHECK(sd_sq.n_pairs() == 4);
    for (const auto& k : {octahedron(), crosspolytope_boundary(2), crosspolytope_boundary(4)}) {
        const auto b = betti(k.complex());
        CHECK(betti(barycentric_subdivision(k).complex()) == b);
    }
    // Facet count of sd(simplex) is (d+1)!.
    CHECK(barycentric_subdivision(PlainComplex(4, {{0, 1, 2, 3}})).facets().size() == 24);
    CHECK(barycentric_subdivision(octahedron(), 1).dimension() == 1);
}

TEST_CASE("nerve of a cover") {
    const auto n = nerve({{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(is_cycle_graph(n, 4));
    const auto full = nerve({{0}, {0, 1}, {0, 2}});
    CHECK(full.facets() == std::vector<Simplex>{{0, 1, 2}});
}

TEST_CASE("equivariant isomorphism") {
    const auto oct = octahedron();
    const auto self = equivariant_isomorphic(oct, oct);
    CHECK(self.isomorphic);
    CHECK_FALSE(equivariant_isomorphic(crosspolytope_boundary(2), oct).isomorphic);
    // A relabelled copy: swap pairs 0 and 2 and flip pair 1.
    std::vector<Simplex> gens;
    auto map = [](Vertex v) -> Vertex {
        const std::size_t j = Z2Complex::pair_of(v);
        const std::size_t nj = j == 0 ? 2 : (j == 2 ? 0 : 1);
        const bool plus = Z2Complex::is_plus(v) != (j == 1);
        return plus ? Z2Complex::plus(nj) : Z2Complex::minus(nj);
    };
    const Z2Complex partial(3, {{0, 2}, {2, 4}, {0, 5}});
    for (auto f : partial.facets()) {
        for (auto& v : f) v = map(v);
        std::sort(f.begin(), f.end());
        gens.push_back(f);
    }
    const Z2Complex moved(3, gens);
    const auto r = equivariant_isomorphic(partial, moved);
    REQUIRE(r.isomorphic);
    // Witness must commute with the involution and map facets to facets.
    for (Vertex v = 0; v < 6; ++v) CHECK(r.witness[Z2Complex::antipode(v)] == Z2Complex::antipode(r.witness[v]));
    for (const auto& f : partial.facets()) {
        Simplex img;
        for (Vertex v : f) img.push_back(r.witness[v]);
        std::sort(img.begin(), img.end());
        CHECK(std::find(moved.facets().begin(), moved.facets().end(), img) != moved.facets().end());
    }
    // Symmetry.
    CHECK(equivariant_isomorphic(moved, partial).isomorphic);
    // Same f-vector, different structure: a 6-cycle vs two triangles.
    const Z2Complex hexagon(3, {{0, 2}, {2, 4}, {1, 4}});
    const Z2Complex triangles(3, {{0, 2}, {2, 4}, {0, 4}});
    CHECK(hexagon.complex().f_vector() == triangles.complex().f_vector());
    CHECK_FALSE(equivariant_isomorphic(hexagon, triangles).isomorphic);
}

TEST_CASE("quotient and its cover cocycle") {
    const auto q0 = quotient(crosspolytope_boundary(1));
    CHECK(q0.complex.facets() == std::vector<Simplex>{{0}});
    CHECK(q0.cover_cocycle.support.empty());

    CHECK(antipodes_within_distance_two(crosspolytope_boundary(2)));
    const auto q1 = quotient(crosspolytope_boundary(2));
    CHECK(q1.subdivided);
    CHECK(betti(q1.complex) == std::vector<std::size_t>{0, 1});
    CHECK(is_cocycle(q1.complex, q1.cover_cocycle));
    CHECK_FALSE(is_edge_coboundary(q1.complex, q1.cover_cocycle));

    const Z2Complex two_edges(2, {{Z2Complex::plus(0), Z2Complex::plus(1)}});
    CHECK_FALSE(antipodes_within_distance_two(two_edges));
    const auto q2 = quotient(two_edges);
    CHECK_FALSE(q2.subdivided);
    CHECK(q2.complex.facets() == std::vector<Simplex>{{0, 1}});
    CHECK(q2.cover_cocycle.support.empty());
}

TEST_CASE("double cover of RP2 and the round trip") {
    const auto t = rp2_six_vertex();
    CHECK(t.facets().size() == 10);
    CHECK(t.f_vector() == std::vector<std::size_t>{6, 15, 10});
    const auto h1 = cohomology_basis(t, 1);
    REQUIRE(h1.size() == 1);
    const auto lift = lift_double_cover(t, h1.front());
    CHECK_FALSE(lift.trivial);
    CHECK(lift.complex.n_vertices() == 12);
    CHECK(lift.complex.complex().f_vector() == std::vector<std::size_t>{12, 30, 20});
    CHECK(betti(lift.complex.complex()) == std::vector<std::size_t>{0, 0, 1});

    const auto q = quotient(lift.complex);
    CHECK(betti(q.complex) == betti(t));
    if (!q.subdivided) {
        CHECK(q.complex == t);
        Cochain diff;
        diff.dim = 1;
        std::set_symmetric_difference(q.cover_cocycle.support.begin(), q.cover_cocycle.support.end(),
                                      h1.front().support.begin(), h1.front().support.end(),
                                      std::inserter(diff.support, diff.support.begin()));
        CHECK(is_edge_coboundary(t, diff));
    } else {
        CHECK_FALSE(is_edge_coboundary(q.complex, q.cover_cocycle));
    }

    Cochain zero;
    zero.dim = 1;
    const auto trivial = lift_double_cover(t, zero);
    CHECK(trivial.trivial);
    CHECK(betti(trivial.complex.complex())[0] == 1);

    Cochain bad;
    bad.dim = 1;
    bad.support.insert(t.faces(1)[1].front());
    CHECK_THROWS_AS(lift_double_cover(t, bad), InvalidInput);
}

TEST_CASE("facet list text format") {
    const auto oct = octahedron();
    CHECK(parse_z2_facets(format_facets(oct)) == oct);
    std::stringstream ss;
    write_facets(ss, oct);
    CHECK(parse_z2_facets(ss) == oct);
    const PlainComplex p(5, {{0, 1, 2}, {3, 4}});
    CHECK(parse_plain_facets(format_facets(p)) == p);
    const auto k = parse_z2_facets("pairs 3\n3+ 1- 2+\n");
    CHECK(k.contains({Z2Complex::minus(0), Z2Complex::plus(1), Z2Complex::plus(2)}));
    CHECK(k.contains({Z2Complex::plus(0), Z2Complex::minus(1), Z2Complex::minus(2)}));
    CHECK_THROWS_AS(parse_z2_facets("pairs 2\n3+\n"), ParseError);
    CHECK_THROWS_AS(parse_z2_facets("pairs 2\n1x\n"), ParseError);
    CHECK_THROWS_AS(parse_z2_facets("vertices 2\n0 1\n"), ParseError);
    CHECK_THROWS(parse_z2_facets("pairs 2\n1+ 1-\n"));
    CHECK_THROWS_AS(parse_plain_facets("vertices 2\n0 a\n"), ParseError);
}
