#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "signtope/signmat.hpp"
#include "signtope/simplicial.hpp"

namespace signtope {

/// sigma_r^+ for a row: j+ where the entry is +, j- where it is -.
Simplex row_simplex(const PartialSignMatrix& a, std::size_t row);

struct SignComplex {
    Z2Complex complex;
    /// For each row r, the index of a facet of `complex` containing sigma_r^+.
    std::vector<std::size_t> row_facet;
};

/// S(A) together with the row -> facet map.
SignComplex build_sign_complex(const PartialSignMatrix& a);
Z2Complex sign_complex(const PartialSignMatrix& a);

/// A_K: one row per facet orbit, using the lexicographically smaller facet.
PartialSignMatrix matrix_from_complex(const Z2Complex& k);

/// Nerve of the cover of S(A) by the row simplices K_i^+ and K_i^-. Cover
/// members are indexed by row, so vertex i+ is K_i^+ and i- is K_i^-.
Z2Complex row_cover_nerve(const PartialSignMatrix& a);

struct VertexMapCheck {
    bool ok = true;
    std::size_t facets_checked = 0;
    /// First VR facet (vertices as bitstrings) whose image is not a face.
    std::optional<std::vector<std::size_t>> failing_facet;
};

/// Check that y -> {y-, (not y)+} sends every facet of VR(Q_n,k) into a
/// single facet of S(GHD_k^n), locating the ball centre x0 for each facet.
VertexMapCheck ghd_vertex_map_check(unsigned n, unsigned k, const GeneratorCaps& caps = {});

}  // namespace signtope
