#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "signtope/simplicial.hpp"

namespace signtope {

/// Face F_{I,a} of the cube: coordinates in free_mask vary, the rest are
/// fixed to the matching bits of fixed_values. Bit i is coordinate i.
struct CubeFace {
    std::uint32_t free_mask = 0;
    std::uint32_t fixed_values = 0;

    unsigned dimension() const noexcept { return static_cast<unsigned>(__builtin_popcount(free_mask)); }
    std::vector<Vertex> vertices() const;
    friend bool operator==(const CubeFace&, const CubeFace&) = default;
};

/// All t-dimensional faces of Q_n, ordered by (free_mask, fixed_values).
std::vector<CubeFace> cube_faces(unsigned n, unsigned t);

/**
 * A complex on the vertices of Q_n (vertex id = bitstring value).
 *
 * `equivariant` holds the same complex as a Z2Complex under x -> ~x when that
 * involution is free on it: pair j is {x, ~x} with x < 2^{n-1} the "+" vertex.
 */
struct CubeComplex {
    unsigned n = 0;
    PlainComplex plain;
    std::optional<Z2Complex> equivariant;

    bool is_free() const noexcept { return equivariant.has_value(); }
};

struct CubeLimits {
    unsigned max_n = 7;
};

/// Maximal cliques of the "Hamming distance <= k" graph, by pivoting
/// Bron-Kerbosch. Output sorted.
std::vector<Simplex> hamming_cliques(unsigned n, unsigned k);

/// VR(Q_n,k): faces are vertex sets of Hamming diameter <= k.
CubeComplex vr_cube(unsigned n, unsigned k, const CubeLimits& limits = {});

/// Union of the t-faces of [0,1]^n, each triangulated as the order complex of
/// its vertices under the componentwise order.
CubeComplex hypercube_skeleton_triangulated(unsigned n, unsigned t, const CubeLimits& limits = {6});

/// VR^t(Q_n,k): diameter <= k sets that lie in a single t-face.
CubeComplex vr_t_subcomplex(unsigned n, unsigned k, unsigned t, const CubeLimits& limits = {});

/// Nerve of the cover of VR^t(Q_n,k) by restrictions to t-faces. Vertex i is
/// cube_faces(n,t)[i]; members span a simplex iff the faces share a cube vertex.
PlainComplex face_cover_nerve(unsigned n, unsigned k, unsigned t, const CubeLimits& limits = {});

/// Reduced Betti numbers of VR(Q_n,k) in degrees 0..max_degree. The clique
/// complex splits as a join over connected components of the complement
/// graph; factors are computed directly and combined.
std::vector<std::size_t> vr_reduced_betti(unsigned n, unsigned k, int max_degree, const FaceLimits& limits = {},
                                          const CubeLimits& cube_limits = {});

/// 2^{n-1} / sum_{i=k+1}^{n} C(n,i), exactly.
mpq_class alpha(unsigned n, unsigned k);

/// Largest t >= 2 with k > t/2 + 2 sqrt(t ln t); 1 if there is none.
unsigned choose_t(unsigned k);

struct TailMargin {
    unsigned t_prime = 0;
    mpq_class alpha;
    /// alpha - (t + 1)
    mpq_class margin;
};

struct TailCheck {
    bool holds = true;
    std::vector<TailMargin> margins;
};

/// For every t' in (k, t], whether alpha(t', k) >= t + 1.
TailCheck tail_inequality_check(unsigned t, unsigned k);

}  // namespace signtope
