#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signtope/bitset.hpp"
#include "signtope/exact_lp.hpp"
#include "signtope/signmat.hpp"
#include "signtope/simplicial.hpp"

namespace signtope {

struct ShatterLimits {
    /// Exact search only for at most this many columns.
    std::size_t max_exact_cols = 24;
};

/// Largest column set on which every +/- pattern occurs in some row.
std::size_t vc_dimension(const PartialSignMatrix& a, const ShatterLimits& limits = {});

struct OmegaResult {
    std::size_t value = 0;
    /// False when the column count exceeded the exact-search cap and a
    /// greedy lower bound was returned instead.
    bool exact = true;
    std::vector<std::size_t> columns;
};

/// Largest column set on which every pattern occurs up to global sign.
OmegaResult omega_diamond(const PartialSignMatrix& a, const ShatterLimits& limits = {});
OmegaResult omega_diamond(const Z2Complex& k, const ShatterLimits& limits = {});

struct ClosureLimits {
    std::size_t max_sets = 100'000;
};

/// Longest strict chain in the family of nonempty intersections of the
/// generators. Throws CapExceeded if the family outgrows limits.max_sets.
std::size_t longest_intersection_chain(const std::vector<Bitset>& generators, const ClosureLimits& limits = {});

/// h(A), generated by the nonempty R_i^+ and R_i^-.
std::size_t chain_height(const PartialSignMatrix& a, const ClosureLimits& limits = {});
/// 2 h(A) - 1.
std::size_t ind_upper_chain_height(const PartialSignMatrix& a, const ClosureLimits& limits = {});
/// Dimension of the order complex of the intersections of facets of S(A).
std::size_t phi_image_dimension(const PartialSignMatrix& a, const ClosureLimits& limits = {});

struct IncidenceGraph {
    /// Vertices of K first (same ids), then one vertex per facet.
    PlainComplex graph;
    /// The involution induced on the graph fixes no vertex or edge.
    bool involution_free = false;
};

IncidenceGraph facet_incidence_graph(const Z2Complex& k);

/// 1 when every two facets share at most one vertex, otherwise none.
std::optional<std::size_t> facet_intersection_index_bound(const Z2Complex& k);

enum class CoindProvenance { Crosspolytope, Homological };
std::string to_string(CoindProvenance p);

struct CoindBound {
    long value = 0;
    CoindProvenance provenance = CoindProvenance::Crosspolytope;
    std::size_t omega = 0;
    bool omega_exact = true;
    /// Unset when the homology computation hit a cap.
    std::optional<int> homological_connectivity;
};

CoindBound coind_lower(const Z2Complex& k, const FaceLimits& limits = {}, const ShatterLimits& shatter = {});
CoindBound coind_lower(const PartialSignMatrix& a, const FaceLimits& limits = {}, const ShatterLimits& shatter = {});

/// Row vectors u_i and column vectors v_j in Q^d.
struct Realization {
    std::size_t d = 0;
    std::vector<RationalVector> rows;
    std::vector<RationalVector> cols;
};

struct RealizationCheck {
    bool ok = true;
    /// First (row, col) whose sign is wrong or zero.
    std::optional<std::pair<std::size_t, std::size_t>> violation;
    std::string reason;
};

RealizationCheck verify_realization(const PartialSignMatrix& a, const Realization& r);

/// Sign vectors of the first 2k+1 coordinates of each bitstring.
Realization ghd_projection_realization(unsigned n, unsigned k, const GeneratorCaps& caps = {});

/// Linear map Q^N -> Q^d given by the images of the basis vectors e_j.
struct LinearMap {
    std::size_t d = 0;
    std::vector<RationalVector> columns;
};

struct FacetCertificate {
    std::size_t row = 0;
    bool positive = true;
    Simplex facet;
    RationalVector u;
    /// min over the facet's vertices x of <u, g(x)>.
    mpq_class min_value;
};

struct OriginAvoidanceCertificate {
    std::vector<FacetCertificate> facets;
};

struct CertifiedMap {
    LinearMap map;
    OriginAvoidanceCertificate certificate;
};

/// g(e_j) = v_j, with witnesses u_r and -u_r on sigma_r^+ and sigma_r^-.
/// Throws InvalidInput naming the first facet where positivity fails.
CertifiedMap realization_to_linear_map(const PartialSignMatrix& a, const Realization& r);

/// Independent exact check of a certificate against the map and S(A).
bool verify_certificate(const PartialSignMatrix& a, const CertifiedMap& m);

/// v_j = g(e_j) and u_r from an exact separating-hyperplane LP. Throws
/// InvalidInput naming the facet whose image hull contains the origin.
Realization linear_map_to_realization(const PartialSignMatrix& a, const LinearMap& g);

struct SrankSearchOptions {
    std::size_t d_max = 0;
    std::uint64_t seed = 1;
    std::size_t iters = 30;
    std::size_t restarts = 8;
    /// Smallest dimension tried.
    std::size_t d_min = 1;
};

/// Heuristic search for a realization with d <= d_max. Returned
/// realizations are exactly verified; failure proves nothing.
std::optional<Realization> srank_upper_search(const PartialSignMatrix& a, const SrankSearchOptions& opts);

/// d = N: columns are the standard basis, rows the signed incidence vectors.
Realization trivial_realization(const PartialSignMatrix& a);

}  // namespace signtope
