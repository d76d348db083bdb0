#pragma once

#include <cstddef>
#include <vector>

#include "signtope/bitset.hpp"

namespace signtope {

/**
 * Incremental row echelon form over the two-element field.
 *
 * Each stored row is keyed by its lowest set bit; inserting reduces the new
 * vector against stored rows in increasing pivot order.
 */
class Gf2Echelon {
public:
    explicit Gf2Echelon(std::size_t n_cols);

    /// Adds v to the span; returns true if it was independent.
    bool insert(Bitset v);
    bool in_span(Bitset v) const;
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t n_cols() const noexcept { return n_cols_; }

private:
    /// Reduces v in place; returns the pivot that blocked, or n_cols_ if v became 0.
    std::size_t reduce(Bitset& v) const;

    std::size_t n_cols_;
    std::vector<int> pivot_row_;
    std::vector<Bitset> rows_;
};

std::size_t gf2_rank(const std::vector<Bitset>& rows, std::size_t n_cols);

/// Basis of { x : <row, x> = 0 for every row }.
std::vector<Bitset> gf2_nullspace(const std::vector<Bitset>& rows, std::size_t n_cols);

}  // namespace signtope
