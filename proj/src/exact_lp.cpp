#include "signtope/exact_lp.hpp"

#include "signtope/error.hpp"

namespace signtope {

mpq_class dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw InvalidInput("dot: dimension mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

LpSolution maximize_from_origin(const std::vector<RationalVector>& a, const RationalVector& b,
                                const RationalVector& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw InvalidInput("lp: row count mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidInput("lp: column count mismatch");
    for (const auto& bi : b)
        if (bi < 0) throw InvalidInput("lp: origin must be feasible");

    // x_B[i] = rhs[i] - sum_j t[i][j] x_N[j];  z = z0 + sum_j cost[j] x_N[j].
    // Labels: 0..n-1 structural, n..n+m-1 slack.
    std::vector<RationalVector> t = a;
    RationalVector rhs = b;
    RationalVector cost = c;
    mpq_class z0 = 0;
    std::vector<std::size_t> basic(m), nonbasic(n);
    for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;

    LpSolution out;
    for (;;) {
        std::size_t e = n;
        for (std::size_t j = 0; j < n; ++j)
            if (cost[j] > 0 && (e == n || nonbasic[j] < nonbasic[e])) e = j;
        if (e == n) break;

        std::size_t r = m;
        mpq_class best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][e] <= 0) continue;
            mpq_class ratio = rhs[i] / t[i][e];
            if (r == m || ratio < best || (ratio == best && basic[i] < basic[r])) r = i, best = ratio;
        }
        if (r == m) {
            out.bounded = false;
            return out;
        }

        const mpq_class inv = 1 / t[r][e];
        for (std::size_t j = 0; j < n; ++j)
            if (j != e) t[r][j] *= inv;
        t[r][e] = inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t[i][e] == 0) continue;
            const mpq_class f = t[i][e];
            for (std::size_t j = 0; j < n; ++j)
                if (j != e && t[r][j] != 0) t[i][j] -= f * t[r][j];
            t[i][e] = -f * inv;
            rhs[i] -= f * rhs[r];
        }
        const mpq_class ce = cost[e];
        for (std::size_t j = 0; j < n; ++j)
            if (j != e) cost[j] -= ce * t[r][j];
        cost[e] = -ce * inv;
        z0 += ce * rhs[r];
        std::swap(basic[r], nonbasic[e]);
    }

    out.value = z0;
    out.x.assign(n, 0);
    for (std::size_t i = 0; i < m; ++i)
        if (basic[i] < n) out.x[basic[i]] = rhs[i];
    return out;
}

RationalVector primitive_integer(RationalVector v) {
    mpz_class l = 1;
    for (auto& q : v) {
        q.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    mpz_class g = 0;
    for (auto& q : v) {
        q *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    if (g == 0) return v;
    for (auto& q : v) q /= g;
    return v;
}

Separation separate_from_origin(const std::vector<RationalVector>& points, std::size_t d) {
    // Variables: u+ (d), u- (d), t. Constraints:
    //   t - <w,u+> + <w,u-> <= 0,  u+_i <= 1,  u-_i <= 1,  t <= 1.
    const std::size_t nv = 2 * d + 1;
    std::vector<RationalVector> a;
    RationalVector b;
    for (const auto& w : points) {
        if (w.size() != d) throw InvalidInput("separate_from_origin: dimension mismatch");
        RationalVector row(nv, 0);
        for (std::size_t i = 0; i < d; ++i) {
            row[i] = -w[i];
            row[d + i] = w[i];
        }
        row[2 * d] = 1;
        a.push_back(std::move(row));
        b.emplace_back(0);
    }
    for (std::size_t i = 0; i < nv; ++i) {
        RationalVector row(nv, 0);
        row[i] = 1;
        a.push_back(std::move(row));
        b.emplace_back(1);
    }
    RationalVector c(nv, 0);
    c[2 * d] = 1;
    const auto sol = maximize_from_origin(a, b, c);

    Separation out;
    out.margin = sol.value;
    out.u.assign(d, 0);
    if (out.margin > 0) {
        for (std::size_t i = 0; i < d; ++i) out.u[i] = sol.x[i] - sol.x[d + i];
        out.u = primitive_integer(std::move(out.u));
    }
    return out;
}

}  // namespace signtope
