#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace signtope {

enum class Sign : std::uint8_t { Plus, Minus, Star };

constexpr Sign negate(Sign s) noexcept {
    return s == Sign::Plus ? Sign::Minus : (s == Sign::Minus ? Sign::Plus : Sign::Star);
}
char to_char(Sign s) noexcept;

/// Signed support of one row: R^+ and R^- as sorted column indices.
struct RowSupport {
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;

    friend bool operator==(const RowSupport&, const RowSupport&) = default;
};

/**
 * Dense matrix over {+, -, *}.
 *
 * Invariant: at least one row and column, and every row has a non-Star entry.
 * Immutable after construction.
 */
class PartialSignMatrix {
public:
    PartialSignMatrix(std::size_t rows, std::size_t cols, std::vector<Sign> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Sign at(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }
    const std::vector<Sign>& entries() const noexcept { return entries_; }

    bool is_total() const noexcept;
    std::size_t specified_count() const noexcept;
    /// Index of the first column with no specified entry, or cols() if none.
    std::size_t first_all_star_column() const noexcept;

    friend bool operator==(const PartialSignMatrix&, const PartialSignMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Sign> entries_;
};

struct GeneratorCaps {
    unsigned max_ghd_n = 14;
    unsigned max_hadamard_exp = 10;
};

/// Gap Hamming Distance on {0,1}^n: + at distance <= k, - at distance >= n-k.
/// Rows and columns are bitstrings in lexicographic (integer) order.
PartialSignMatrix ghd(unsigned n, unsigned k, const GeneratorCaps& caps = {});

/// Sylvester-Hadamard matrix (-1)^<x,y> over F_2^n.
PartialSignMatrix hadamard(unsigned n_exp, const GeneratorCaps& caps = {});

/// n x n total matrix with iid uniform signs. Bits come from the top bit of
/// successive std::mt19937_64 outputs seeded with `seed` (row-major order).
PartialSignMatrix random_total(std::size_t n, std::uint64_t seed);
PartialSignMatrix random_total(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// Randomly signed line/point incidence matrix of PG(2,q), q in {2,3,4,5}.
/// Rows are lines, columns points; non-incident entries are Star.
PartialSignMatrix pg_random_partial(unsigned q, std::uint64_t seed);

/// Lines of PG(2,q) as sorted point indices; the Star pattern of pg_random_partial.
std::vector<std::vector<std::size_t>> projective_plane_lines(unsigned q);

PartialSignMatrix transpose(const PartialSignMatrix& a);

std::vector<RowSupport> row_supports(const PartialSignMatrix& a);

/// Hamming distance between bitstrings x and y.
inline unsigned hamming(std::uint64_t x, std::uint64_t y) noexcept {
    return static_cast<unsigned>(__builtin_popcountll(x ^ y));
}

// Text format: "rows cols" header, then one line per row of '+', '-', '*'.
std::string format_matrix(const PartialSignMatrix& a);
void write_matrix(std::ostream& os, const PartialSignMatrix& a);
PartialSignMatrix parse_matrix(std::istream& is);
PartialSignMatrix parse_matrix(const std::string& text);

}  // namespace signtope
