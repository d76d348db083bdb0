#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "signtope/bitset.hpp"

namespace signtope {

using Vertex = std::uint32_t;
/// A simplex as its sorted, duplicate-free vertex list.
using Simplex = std::vector<Vertex>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// True iff a is a subset of b (both sorted).
bool is_subface(const Simplex& a, const Simplex& b);

/// Deduplicate and keep only inclusion-maximal sets. Output is sorted by
/// (size descending, lexicographic).
std::vector<Simplex> maximal_elements(std::vector<Simplex> sets, std::size_t n_vertices);

/// Size caps shared by everything that expands facets into faces.
struct FaceLimits {
    std::size_t max_faces = 2'000'000;
};

/**
 * Abstract simplicial complex stored by its facets.
 *
 * Faces are implicit: a set is a face iff it lies in some facet. Vertex ids
 * range over [0, n_vertices); ids that lie in no facet are ignored by every
 * topological computation.
 */
class PlainComplex {
public:
    PlainComplex() = default;
    PlainComplex(std::size_t n_vertices, std::vector<Simplex> generators);

    std::size_t n_vertices() const noexcept { return n_vertices_; }
    const std::vector<Simplex>& facets() const noexcept { return facets_; }
    /// Largest facet size minus one; -1 for the empty complex.
    int dimension() const noexcept;
    bool contains(const Simplex& s) const;

    /// All nonempty faces of dimension <= max_dim (max_dim < 0 means all),
    /// grouped by dimension, each group sorted lexicographically.
    std::vector<std::vector<Simplex>> faces(int max_dim = -1, const FaceLimits& limits = {}) const;
    std::vector<std::size_t> f_vector(int max_dim = -1, const FaceLimits& limits = {}) const;

    friend bool operator==(const PlainComplex&, const PlainComplex&) = default;

private:
    std::size_t n_vertices_ = 0;
    std::vector<Simplex> facets_;
};

/**
 * Simplicial complex with a free involution on paired vertices.
 *
 * Pair j owns vertices 2j ("j+") and 2j+1 ("j-"); the involution swaps them.
 * The facet set is closed under the involution and no face contains both
 * vertices of a pair.
 */
class Z2Complex {
public:
    Z2Complex() = default;
    Z2Complex(std::size_t n_pairs, std::vector<Simplex> generators);

    /// Relabel a complex whose involution is given explicitly as a vertex
    /// permutation. Orbits are numbered by their smaller vertex; that vertex
    /// becomes "+". `relabel`, if given, receives old vertex -> new vertex.
    static Z2Complex from_involution(std::size_t n_vertices, std::vector<Simplex> generators,
                                     const std::vector<Vertex>& involution, std::vector<Vertex>* relabel = nullptr);

    static constexpr Vertex plus(std::size_t j) noexcept { return static_cast<Vertex>(2 * j); }
    static constexpr Vertex minus(std::size_t j) noexcept { return static_cast<Vertex>(2 * j + 1); }
    static constexpr Vertex antipode(Vertex v) noexcept { return v ^ 1U; }
    static constexpr std::size_t pair_of(Vertex v) noexcept { return v / 2; }
    static constexpr bool is_plus(Vertex v) noexcept { return (v & 1U) == 0; }
    static Simplex antipode(const Simplex& s);
    /// "j+" / "j-" with j counted from 1.
    static std::string label(Vertex v);

    std::size_t n_pairs() const noexcept { return n_pairs_; }
    std::size_t n_vertices() const noexcept { return 2 * n_pairs_; }
    const std::vector<Simplex>& facets() const noexcept { return complex_.facets(); }
    const PlainComplex& complex() const noexcept { return complex_; }
    int dimension() const noexcept { return complex_.dimension(); }
    bool contains(const Simplex& s) const { return complex_.contains(s); }

    friend bool operator==(const Z2Complex&, const Z2Complex&) = default;

private:
    std::size_t n_pairs_ = 0;
    PlainComplex complex_;
};

/// Finite family of sets ordered by inclusion (typically the faces of a complex).
struct FacePoset {
    std::vector<Simplex> elements;
};

FacePoset face_poset(const PlainComplex& k, const FaceLimits& limits = {});

/// Boundary of the d-dimensional crosspolytope: all sets with no antipodal pair.
Z2Complex crosspolytope_boundary(std::size_t d);

/// Deleted join of two copies of the (d-1)-simplex; copy 1 gives "+", copy 2 "-".
Z2Complex deleted_join_simplex(std::size_t d);

PlainComplex skeleton(const PlainComplex& k, int r);
Z2Complex skeleton(const Z2Complex& k, int r);

/// Order complex: simplices are the strict chains of the poset. Vertex i is
/// elements[i]. With max_dim >= 0 only chains of length <= max_dim + 1 are kept.
PlainComplex order_complex(const FacePoset& p, int max_dim = -1);

/// sd(K) = order complex of the face poset. Vertex i of the result is the
/// i-th face of K in the order of face_poset(K). max_dim truncates to that
/// skeleton of sd(K).
PlainComplex barycentric_subdivision(const PlainComplex& k, int max_dim = -1, const FaceLimits& limits = {});
Z2Complex barycentric_subdivision(const Z2Complex& k, int max_dim = -1, const FaceLimits& limits = {});

/// Nerve of a cover given as vertex sets: a family of members spans a
/// simplex iff the members share a vertex. Vertex i is cover member i.
PlainComplex nerve(const std::vector<Simplex>& cover);

struct IsomorphismLimits {
    std::size_t max_pairs = 24;
    std::size_t max_facets = 100'000;
};

struct IsomorphismResult {
    bool isomorphic = false;
    /// Vertex map of the first complex into the second; empty when not isomorphic.
    std::vector<Vertex> witness;
};

/// Search for a vertex bijection that commutes with the involutions and maps
/// facets onto facets.
IsomorphismResult equivariant_isomorphic(const Z2Complex& a, const Z2Complex& b, const IsomorphismLimits& limits = {});

/// Cochain over the two-element field: the faces of degree `dim` where it is 1.
struct Cochain {
    int dim = 0;
    std::set<Simplex> support;

    bool value(const Simplex& s) const { return support.count(s) != 0; }
    friend bool operator==(const Cochain&, const Cochain&) = default;
};

struct Quotient {
    PlainComplex complex;
    /// Edge cochain of the double cover: 1 on an edge iff its lift that starts
    /// at the "+" vertex of the lower endpoint ends at a "-" vertex.
    Cochain cover_cocycle;
    /// Whether K was barycentrically subdivided before quotienting.
    bool subdivided = false;
};

/// True if some vertex v has a common neighbour with its antipode.
bool antipodes_within_distance_two(const Z2Complex& k);

/// Orbit space K/Z2 with one vertex per pair. Subdivides once first when any
/// antipodal pair is at edge distance <= 2. max_dim truncates the result.
Quotient quotient(const Z2Complex& k, int max_dim = -1, const FaceLimits& limits = {});

struct DoubleCover {
    Z2Complex complex;
    /// The cochain is a coboundary: the lift is two disjoint copies of T.
    bool trivial = false;
};

/// Lift a triangulation along the double cover classified by the 1-cocycle w.
/// Vertex v of T lifts to pair v. Throws InvalidInput if w is not a cocycle.
DoubleCover lift_double_cover(const PlainComplex& t, const Cochain& w);

/// Whether a 1-cochain is the coboundary of a 0-cochain on the 1-skeleton of t.
bool is_edge_coboundary(const PlainComplex& t, const Cochain& w);

/// The 6-vertex triangulation of the real projective plane (10 triangles).
PlainComplex rp2_six_vertex();

// Facet-list text format. Z2: header "pairs N" then labels like "3+ 7- 1+".
// Plain: header "vertices N" then bare integers.
void write_facets(std::ostream& os, const Z2Complex& k);
void write_facets(std::ostream& os, const PlainComplex& k);
std::string format_facets(const Z2Complex& k);
std::string format_facets(const PlainComplex& k);
Z2Complex parse_z2_facets(std::istream& is);
Z2Complex parse_z2_facets(const std::string& text);
PlainComplex parse_plain_facets(std::istream& is);
PlainComplex parse_plain_facets(const std::string& text);

}  // namespace signtope
