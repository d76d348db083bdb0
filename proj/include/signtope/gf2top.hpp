#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "signtope/bitset.hpp"
#include "signtope/simplicial.hpp"

namespace signtope {

/**
 * Chain complex over the two-element field built from a simplicial complex.
 *
 * basis(d) lists the d-faces in lexicographic order; boundary(d) has one
 * Bitset per d-face over the (d-1)-faces. boundary(0) is empty: the
 * augmentation is handled by betti().
 */
class Gf2ChainComplex {
public:
    Gf2ChainComplex(const PlainComplex& k, int max_dim, const FaceLimits& limits = {});

    /// Highest dimension with a nonempty basis (-1 if none).
    int top_dim() const noexcept { return static_cast<int>(bases_.size()) - 1; }
    int max_dim() const noexcept { return max_dim_; }
    const std::vector<Simplex>& basis(int d) const;
    std::size_t size(int d) const noexcept;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    const std::vector<Bitset>& boundary(int d) const;

    /// Composite of consecutive boundaries vanishes in every degree.
    bool boundary_squared_is_zero() const;
    std::size_t boundary_rank(int d) const;

    /// Coboundary of a degree-d cochain (as a Bitset over basis(d)).
    Bitset coboundary(int d, const Bitset& c) const;
    Bitset to_bits(const Cochain& c) const;
    Cochain from_bits(int d, const Bitset& b) const;

private:
    int max_dim_;
    std::vector<std::vector<Simplex>> bases_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
    std::vector<std::vector<Bitset>> boundaries_;
};

Gf2ChainComplex chain_complex(const PlainComplex& k, int max_dim, const FaceLimits& limits = {});

/// Reduced Betti numbers in degrees 0..max_dim (max_dim < 0: up to dim K).
std::vector<std::size_t> betti(const PlainComplex& k, int max_dim = -1, const FaceLimits& limits = {});

/// Returned by homological_connectivity when every reduced Betti number vanishes.
inline constexpr int kAcyclic = std::numeric_limits<int>::max();

/// Largest r with reduced Betti numbers zero through degree r (-1 if disconnected).
int homological_connectivity(const PlainComplex& k, const FaceLimits& limits = {});

bool is_cocycle(const PlainComplex& k, const Cochain& c, const FaceLimits& limits = {});
/// Whether c is delta of some cochain one degree lower (degree 0: only zero).
bool is_coboundary(const PlainComplex& k, const Cochain& c, const FaceLimits& limits = {});

/// Simplicial cup product with the vertex order given by vertex ids.
/// Both inputs must be cocycles on k.
Cochain cup_product(const PlainComplex& k, const Cochain& a, const Cochain& b, const FaceLimits& limits = {});

/// Cocycles whose classes form a basis of H^d(K).
std::vector<Cochain> cohomology_basis(const PlainComplex& k, int d, const FaceLimits& limits = {});

struct SwhResult {
    std::size_t height = 0;
    /// Largest degree examined.
    std::size_t degree_checked = 0;
};

/// Stiefel-Whitney height: the largest m with w1^m nonzero in H^m(K/Z2).
/// Computed on tau-invariant cochains of K, so no subdivision is needed.
SwhResult stiefel_whitney_height(const Z2Complex& k, const FaceLimits& limits = {});
std::size_t swh(const Z2Complex& k, const FaceLimits& limits = {});

/// Reduced Betti numbers of a join from those of its factors, degrees
/// 0..max_dim. Uses H~_{r+1}(X*Y) = sum_{i+j=r} H~_i(X) (x) H~_j(Y).
/// Each factor's list must cover degrees 0..max_dim.
std::vector<std::size_t> join_reduced_betti(const std::vector<std::vector<std::size_t>>& factors, int max_dim);

}  // namespace signtope
