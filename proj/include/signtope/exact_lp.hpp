#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace signtope {

using RationalVector = std::vector<mpq_class>;

struct LpSolution {
    bool bounded = true;
    mpq_class value;
    RationalVector x;
};

/**
 * maximize c.x subject to A x <= b, x >= 0, over the rationals.
 *
 * Requires b >= 0 so the origin is a feasible start. Dictionary simplex with
 * Bland's rule, so it terminates without cycling.
 */
LpSolution maximize_from_origin(const std::vector<RationalVector>& a, const RationalVector& b,
                                const RationalVector& c);

struct Separation {
    /// Optimal t of: max t, <w,u> >= t for all points w, |u_i| <= 1, t <= 1.
    mpq_class margin;
    /// The maximizing u, scaled to a primitive integer vector (zero if margin is 0).
    RationalVector u;
};

/// Strict separation of a point set from the origin in Q^d. margin > 0 iff
/// the origin is outside the convex hull.
Separation separate_from_origin(const std::vector<RationalVector>& points, std::size_t d);

/// Scale a nonzero vector to coprime integers (same direction). Zero stays zero.
RationalVector primitive_integer(RationalVector v);

mpq_class dot(const RationalVector& a, const RationalVector& b);

}  // namespace signtope
