#include "signtope/signmat.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "signtope/error.hpp"

namespace signtope {

char to_char(Sign s) noexcept {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        default: return '*';
    }
}

PartialSignMatrix::PartialSignMatrix(std::size_t rows, std::size_t cols, std::vector<Sign> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw InvalidInput("sign matrix must have at least one row and one column");
    if (entries_.size() != rows_ * cols_) throw InvalidInput("sign matrix entry count does not match shape");
    for (std::size_t r = 0; r < rows_; ++r) {
        auto first = entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
        if (std::all_of(first, first + static_cast<std::ptrdiff_t>(cols_), [](Sign s) { return s == Sign::Star; }))
            throw InvalidInput("row " + std::to_string(r) + " has no specified entry");
    }
}

bool PartialSignMatrix::is_total() const noexcept {
    return std::none_of(entries_.begin(), entries_.end(), [](Sign s) { return s == Sign::Star; });
}

std::size_t PartialSignMatrix::specified_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](Sign s) { return s != Sign::Star; }));
}

std::size_t PartialSignMatrix::first_all_star_column() const noexcept {
    for (std::size_t c = 0; c < cols_; ++c) {
        bool any = false;
        for (std::size_t r = 0; r < rows_ && !any; ++r) any = at(r, c) != Sign::Star;
        if (!any) return c;
    }
    return cols_;
}

PartialSignMatrix ghd(unsigned n, unsigned k, const GeneratorCaps& caps) {
    if (k < 1) throw InvalidInput("ghd requires k >= 1");
    if (2 * k >= n) throw InvalidInput("ghd requires 2k < n");
    if (n > caps.max_ghd_n) throw CapExceeded("ghd: n=" + std::to_string(n) + " exceeds cap " + std::to_string(caps.max_ghd_n));
    const std::size_t dim = std::size_t{1} << n;
    std::vector<Sign> e(dim * dim);
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) {
            unsigned d = hamming(x, y);
            e[x * dim + y] = d <= k ? Sign::Plus : (d >= n - k ? Sign::Minus : Sign::Star);
        }
    return {dim, dim, std::move(e)};
}

PartialSignMatrix hadamard(unsigned n_exp, const GeneratorCaps& caps) {
    if (n_exp < 1) throw InvalidInput("hadamard requires n >= 1");
    if (n_exp > caps.max_hadamard_exp)
        throw CapExceeded("hadamard: n=" + std::to_string(n_exp) + " exceeds cap " + std::to_string(caps.max_hadamard_exp));
    const std::size_t dim = std::size_t{1} << n_exp;
    std::vector<Sign> e(dim * dim);
    for (std::size_t x = 0; x < dim; ++x)
        for (std::size_t y = 0; y < dim; ++y) e[x * dim + y] = (hamming(x & y, 0) % 2 == 0) ? Sign::Plus : Sign::Minus;
    return {dim, dim, std::move(e)};
}

PartialSignMatrix random_total(std::size_t n, std::uint64_t seed) { return random_total(n, n, seed); }

PartialSignMatrix random_total(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    if (rows == 0 || cols == 0) throw InvalidInput("random_total requires at least one row and column");
    std::mt19937_64 gen(seed);
    std::vector<Sign> e(rows * cols);
    for (auto& s : e) s = (gen() >> 63) ? Sign::Minus : Sign::Plus;
    return {rows, cols, std::move(e)};
}

namespace {

// Arithmetic in F_q for q in {2,3,4,5}. F_4 = F_2[a]/(a^2+a+1) with 2 = a, 3 = a+1.
struct SmallField {
    unsigned q;

    unsigned add(unsigned a, unsigned b) const { return q == 4 ? (a ^ b) : (a + b) % q; }
    unsigned mul(unsigned a, unsigned b) const {
        if (q != 4) return (a * b) % q;
        static constexpr std::array<std::array<unsigned, 4>, 4> table{{
            {0, 0, 0, 0},
            {0, 1, 2, 3},
            {0, 2, 3, 1},
            {0, 3, 1, 2},
        }};
        return table[a][b];
    }
};

using Vec3 = std::array<unsigned, 3>;

// Normalized representatives (first nonzero coordinate 1) in lexicographic order.
std::vector<Vec3> projective_points(unsigned q) {
    std::vector<Vec3> pts;
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            for (unsigned c = 0; c < q; ++c) {
                Vec3 v{a, b, c};
                auto nz = std::find_if(v.begin(), v.end(), [](unsigned x) { return x != 0; });
                if (nz != v.end() && *nz == 1) pts.push_back(v);
            }
    return pts;
}

}  // namespace

std::vector<std::vector<std::size_t>> projective_plane_lines(unsigned q) {
    if (q < 2 || q > 5) throw InvalidInput("projective plane order must be one of 2, 3, 4, 5");
    SmallField f{q};
    auto pts = projective_points(q);
    std::vector<std::vector<std::size_t>> lines;
    lines.reserve(pts.size());
    for (const auto& l : pts) {
        std::vector<std::size_t> on;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            unsigned dot = 0;
            for (int i = 0; i < 3; ++i) dot = f.add(dot, f.mul(l[i], pts[p][i]));
            if (dot == 0) on.push_back(p);
        }
        lines.push_back(std::move(on));
    }
    return lines;
}

PartialSignMatrix pg_random_partial(unsigned q, std::uint64_t seed) {
    auto lines = projective_plane_lines(q);
    const std::size_t n = lines.size();
    std::mt19937_64 gen(seed);
    std::vector<Sign> e(n * n, Sign::Star);
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t p : lines[l]) e[l * n + p] = (gen() >> 63) ? Sign::Minus : Sign::Plus;
    return {n, n, std::move(e)};
}

PartialSignMatrix transpose(const PartialSignMatrix& a) {
    if (std::size_t c = a.first_all_star_column(); c != a.cols())
        throw InvalidInput("transpose: column " + std::to_string(c) + " has no specified entry");
    std::vector<Sign> e(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) e[c * a.rows() + r] = a.at(r, c);
    return {a.cols(), a.rows(), std::move(e)};
}

std::vector<RowSupport> row_supports(const PartialSignMatrix& a) {
    std::vector<RowSupport> out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a.at(r, c) == Sign::Plus) out[r].pos.push_back(c);
            else if (a.at(r, c) == Sign::Minus) out[r].neg.push_back(c);
        }
    return out;
}

void write_matrix(std::ostream& os, const PartialSignMatrix& a) {
    os << a.rows() << ' ' << a.cols() << '\n';
    std::string line(a.cols(), ' ');
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) line[c] = to_char(a.at(r, c));
        os << line << '\n';
    }
}

std::string format_matrix(const PartialSignMatrix& a) {
    std::ostringstream os;
    write_matrix(os, a);
    return os.str();
}

PartialSignMatrix parse_matrix(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw ParseError("matrix: missing header line");
    std::istringstream hs(header);
    long long rows = -1, cols = -1;
    std::string extra;
    if (!(hs >> rows >> cols) || (hs >> extra) || rows <= 0 || cols <= 0)
        throw ParseError("matrix: header must be two positive integers 'rows cols'");
    std::vector<Sign> e;
    e.reserve(static_cast<std::size_t>(rows * cols));
    std::string line;
    for (long long r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw ParseError("matrix: expected " + std::to_string(rows) + " rows, got " + std::to_string(r));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long long>(line.size()) != cols)
            throw ParseError("matrix: row " + std::to_string(r) + " has length " + std::to_string(line.size()) +
                             ", expected " + std::to_string(cols));
        for (char ch : line) {
            switch (ch) {
                case '+': e.push_back(Sign::Plus); break;
                case '-': e.push_back(Sign::Minus); break;
                case '*': e.push_back(Sign::Star); break;
                default: throw ParseError(std::string("matrix: unexpected character '") + ch + "' in row " + std::to_string(r));
            }
        }
    }
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("matrix: trailing content after last row");
    try {
        return {static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(e)};
    } catch (const InvalidInput& err) {
        throw ParseError(std::string("matrix: ") + err.what());
    }
}

PartialSignMatrix parse_matrix(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix(is);
}

}  // namespace signtope
