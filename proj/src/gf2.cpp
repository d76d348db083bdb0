#include "signtope/gf2.hpp"

#include "signtope/error.hpp"

namespace signtope {

Gf2Echelon::Gf2Echelon(std::size_t n_cols) : n_cols_(n_cols), pivot_row_(n_cols, -1) {}

std::size_t Gf2Echelon::reduce(Bitset& v) const {
    std::size_t p = v.find_first();
    while (p < n_cols_) {
        const int r = pivot_row_[p];
        if (r < 0) return p;
        v ^= rows_[static_cast<std::size_t>(r)];
        p = v.find_next_from(p + 1);
    }
    return n_cols_;
}

bool Gf2Echelon::insert(Bitset v) {
    if (v.size() != n_cols_) throw InvalidInput("Gf2Echelon: vector length mismatch");
    const std::size_t p = reduce(v);
    if (p == n_cols_) return false;
    pivot_row_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

bool Gf2Echelon::in_span(Bitset v) const {
    if (v.size() != n_cols_) throw InvalidInput("Gf2Echelon: vector length mismatch");
    return reduce(v) == n_cols_;
}

std::size_t gf2_rank(const std::vector<Bitset>& rows, std::size_t n_cols) {
    Gf2Echelon e(n_cols);
    for (const auto& r : rows) e.insert(r);
    return e.rank();
}

std::vector<Bitset> gf2_nullspace(const std::vector<Bitset>& rows, std::size_t n_cols) {
    // Reduced row echelon form with pivots chosen left to right.
    std::vector<Bitset> m;
    for (const auto& r : rows) {
        if (r.size() != n_cols) throw InvalidInput("gf2_nullspace: row length mismatch");
        m.push_back(r);
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n_cols && rank < m.size(); ++c) {
        std::size_t sel = rank;
        while (sel < m.size() && !m[sel].test(c)) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        for (std::size_t r = 0; r < m.size(); ++r)
            if (r != rank && m[r].test(c)) m[r] ^= m[rank];
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(n_cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<Bitset> basis;
    for (std::size_t f = 0; f < n_cols; ++f) {
        if (is_pivot[f]) continue;
        Bitset x(n_cols);
        x.set(f);
        for (std::size_t r = 0; r < rank; ++r)
            if (m[r].test(f)) x.set(pivot_cols[r]);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace signtope
