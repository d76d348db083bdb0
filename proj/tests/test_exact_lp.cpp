#include <doctest.h>

#include <optional>
#include <random>

#include "signtope/error.hpp"
#include "signtope/exact_lp.hpp"

using namespace signtope;

namespace {

// Best objective over the vertices of {A x <= b, x >= 0} in two variables.
std::optional<mpq_class> best_vertex_2d(const std::vector<RationalVector>& a, const RationalVector& b,
                                        const RationalVector& c) {
    std::vector<RationalVector> rows = a;
    RationalVector rhs = b;
    rows.push_back({-1, 0});
    rhs.push_back(0);
    rows.push_back({0, -1});
    rhs.push_back(0);
    std::optional<mpq_class> best;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            const mpq_class det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
            if (det == 0) continue;
            const mpq_class x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
            const mpq_class y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
            bool feasible = true;
            for (std::size_t k = 0; k < rows.size(); ++k) feasible = feasible && rows[k][0] * x + rows[k][1] * y <= rhs[k];
            if (!feasible) continue;
            const mpq_class v = c[0] * x + c[1] * y;
            if (!best || v > *best) best = v;
        }
    return best;
}

bool feasible(const std::vector<RationalVector>& a, const RationalVector& b, const RationalVector& x) {
    for (const auto& xi : x)
        if (xi < 0) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (dot(a[i], x) > b[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("textbook LP optimum") {
    const std::vector<RationalVector> a{{1, 2}, {3, 1}};
    const RationalVector b{4, 6}, c{1, 1};
    const auto s = maximize_from_origin(a, b, c);
    REQUIRE(s.bounded);
    CHECK(s.value == mpq_class(14, 5));
    CHECK(s.x[0] == mpq_class(8, 5));
    CHECK(s.x[1] == mpq_class(6, 5));
}

TEST_CASE("unbounded LP") {
    const auto s = maximize_from_origin({{-1, 0}}, {1}, {1, 0});
    CHECK_FALSE(s.bounded);
}

TEST_CASE("LP input validation") {
    CHECK_THROWS_AS(maximize_from_origin({{1, 1}}, {-1}, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(maximize_from_origin({{1, 1}}, {1, 2}, {1, 1}), InvalidInput);
    CHECK_THROWS_AS(maximize_from_origin({{1}}, {1}, {1, 1}), InvalidInput);
}

TEST_CASE("degenerate LP terminates (Beale's cycling example)") {
    const std::vector<RationalVector> a{{mpq_class(1, 4), -8, -1, 9}, {mpq_class(1, 2), -12, mpq_class(-1, 2), 3}, {0, 0, 1, 0}};
    const RationalVector b{0, 0, 1};
    const RationalVector c{mpq_class(3, 4), -20, mpq_class(1, 2), -6};
    const auto s = maximize_from_origin(a, b, c);
    REQUIRE(s.bounded);
    CHECK(feasible(a, b, s.x));
    CHECK(dot(c, s.x) == s.value);
    CHECK(s.value == mpq_class(5, 4));
}

TEST_CASE("random 2D LPs agree with vertex enumeration") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-6, 9), rhs(0, 12);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<RationalVector> a{{1, 1}};
        RationalVector b{20};
        for (int i = 0; i < 4; ++i) {
            a.push_back({coef(rng), coef(rng)});
            b.push_back(rhs(rng));
        }
        const RationalVector c{coef(rng), coef(rng)};
        const auto s = maximize_from_origin(a, b, c);
        REQUIRE(s.bounded);
        CHECK(feasible(a, b, s.x));
        CHECK(dot(c, s.x) == s.value);
        const auto best = best_vertex_2d(a, b, c);
        REQUIRE(best);
        CHECK(s.value == *best);
    }
}

TEST_CASE("separation from the origin") {
    const auto s = separate_from_origin({{1, 0}, {0, 1}}, 2);
    CHECK(s.margin > 0);
    CHECK(dot(s.u, {1, 0}) > 0);
    CHECK(dot(s.u, {0, 1}) > 0);
    CHECK(separate_from_origin({{1, 0}, {-1, 0}}, 2).margin == 0);
    CHECK(separate_from_origin({{0, 0}}, 2).margin == 0);
    CHECK(separate_from_origin({{1, 1}, {-1, 2}, {2, -1}, {-1, -1}}, 2).margin == 0);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        // Points with positive first-plus-second coordinate sum are separable.
        std::vector<RationalVector> pts;
        while (pts.size() < 6) {
            RationalVector p{coord(rng), coord(rng), coord(rng)};
            if (p[0] + p[1] + p[2] > 0) pts.push_back(p);
        }
        const auto sep = separate_from_origin(pts, 3);
        REQUIRE(sep.margin > 0);
        for (const auto& p : pts) CHECK(dot(sep.u, p) > 0);
        for (const auto& x : sep.u) CHECK(x.get_den() == 1);
    }
    CHECK_THROWS_AS(separate_from_origin({{1, 2, 3}}, 2), InvalidInput);
}

TEST_CASE("primitive integer vectors and dot") {
    CHECK(primitive_integer({mpq_class(2, 3), mpq_class(4, 3)}) == RationalVector{1, 2});
    CHECK(primitive_integer({mpq_class(-1, 2), 0}) == RationalVector{-1, 0});
    CHECK(primitive_integer({6, -9, 12}) == RationalVector{2, -3, 4});
    CHECK(primitive_integer({0, 0}) == RationalVector{0, 0});
    CHECK(dot({1, 2, 3}, {4, 5, 6}) == 32);
    CHECK_THROWS_AS(dot({1}, {1, 2}), InvalidInput);
}
