#include "signtope/bounds.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "signtope/error.hpp"
#include "signtope/gf2top.hpp"
#include "signtope/signcomplex.hpp"

namespace signtope {

namespace {

// Rows as (specified, positive) column masks; exact search only.
struct MaskRows {
    std::vector<std::uint32_t> spec;
    std::vector<std::uint32_t> pos;
};

MaskRows mask_rows(const PartialSignMatrix& a) {
    MaskRows m;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint32_t s = 0, p = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Sign x = a.at(r, c);
            if (x != Sign::Star) s |= std::uint32_t{1} << c;
            if (x == Sign::Plus) p |= std::uint32_t{1} << c;
        }
        m.spec.push_back(s);
        m.pos.push_back(p);
    }
    return m;
}

std::uint32_t compress(std::uint32_t x, std::uint32_t mask) {
    std::uint32_t out = 0, bit = 1;
    for (; mask; mask &= mask - 1, bit <<= 1)
        if (x & mask & (~mask + 1)) out |= bit;
    return out;
}

bool shattered(const MaskRows& m, std::uint32_t set, bool up_to_sign) {
    const int s = std::popcount(set);
    const std::size_t need = std::size_t{1} << (up_to_sign ? s - 1 : s);
    if (m.spec.size() < need) return false;
    std::vector<char> seen(std::size_t{1} << s, 0);
    std::size_t found = 0;
    const std::uint32_t top = std::uint32_t{1} << (s - 1);
    for (std::size_t r = 0; r < m.spec.size(); ++r) {
        if ((m.spec[r] & set) != set) continue;
        std::uint32_t p = compress(m.pos[r], set);
        if (up_to_sign && (p & top)) p = ~p & ((top << 1) - 1);
        if (!seen[p]) {
            seen[p] = 1;
            if (++found == need) return true;
        }
    }
    return false;
}

// Level-wise search; shattered families are closed under taking subsets.
std::pair<std::size_t, std::uint32_t> largest_shattered(const PartialSignMatrix& a, bool up_to_sign) {
    const MaskRows m = mask_rows(a);
    const std::size_t n = a.cols();
    std::vector<std::uint32_t> level{0};
    std::size_t best = 0;
    std::uint32_t best_set = 0;
    for (std::size_t s = 1; s <= n; ++s) {
        std::unordered_set<std::uint32_t> prev(level.begin(), level.end());
        std::vector<std::uint32_t> next;
        for (std::uint32_t set : level) {
            const unsigned lo = set ? 32 - std::countl_zero(set) : 0;
            for (unsigned j = lo; j < n; ++j) {
                const std::uint32_t cand = set | (std::uint32_t{1} << j);
                bool ok = true;
                for (std::uint32_t rest = cand; rest && ok; rest &= rest - 1)
                    ok = prev.count(cand & ~(rest & (~rest + 1))) != 0;
                if (ok && shattered(m, cand, up_to_sign)) next.push_back(cand);
            }
        }
        if (next.empty()) break;
        best = s;
        best_set = next.front();
        level = std::move(next);
    }
    return {best, best_set};
}

std::vector<std::size_t> mask_to_cols(std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1U) out.push_back(i);
    return out;
}

bool shattered_up_to_sign(const PartialSignMatrix& a, const std::vector<std::size_t>& cols) {
    const std::size_t s = cols.size();
    if (s >= 31) return false;
    std::unordered_set<std::uint32_t> seen;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint32_t p = 0;
        bool full = true;
        for (std::size_t i = 0; i < s && full; ++i) {
            const Sign x = a.at(r, cols[i]);
            if (x == Sign::Star) full = false;
            if (x == Sign::Plus) p |= std::uint32_t{1} << i;
        }
        if (!full) continue;
        if (p >> (s - 1)) p = ~p & ((std::uint32_t{1} << s) - 1);
        seen.insert(p);
    }
    return seen.size() == (std::size_t{1} << (s - 1));
}

}  // namespace

std::size_t vc_dimension(const PartialSignMatrix& a, const ShatterLimits& limits) {
    if (a.cols() > limits.max_exact_cols || a.cols() > 31)
        throw CapExceeded("vc_dimension: " + std::to_string(a.cols()) + " columns exceeds exact-search cap");
    return largest_shattered(a, false).first;
}

OmegaResult omega_diamond(const PartialSignMatrix& a, const ShatterLimits& limits) {
    OmegaResult out;
    if (a.cols() <= limits.max_exact_cols && a.cols() <= 31) {
        auto [value, set] = largest_shattered(a, true);
        out.value = value;
        out.columns = mask_to_cols(set);
        return out;
    }
    out.exact = false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        out.columns.push_back(j);
        if (!shattered_up_to_sign(a, out.columns)) out.columns.pop_back();
    }
    out.value = out.columns.size();
    return out;
}

OmegaResult omega_diamond(const Z2Complex& k, const ShatterLimits& limits) {
    return omega_diamond(matrix_from_complex(k), limits);
}

namespace {

// Decides whether some chain of `need` members starts at `top`. A failure for
// `need` at a set is remembered: it also rules out every larger `need`.
class ChainSearch {
public:
    ChainSearch(std::vector<Bitset> gens, std::size_t max_sets) : gens_(std::move(gens)), max_sets_(max_sets) {}

    bool exists(const Bitset& top, std::size_t need) {
        if (need <= 1) return true;
        // A strict chain inside `top` loses an element at every step.
        if (top.count() < need) return false;
        auto it = failed_.find(top);
        if (it != failed_.end() && it->second <= need) return false;
        std::vector<Bitset> children;
        for (const auto& g : gens_) {
            if (top.is_subset_of(g)) continue;
            Bitset x = top & g;
            if (x.none() || x.count() + 1 < need) continue;
            children.push_back(std::move(x));
        }
        std::sort(children.begin(), children.end(),
                  [](const Bitset& a, const Bitset& b) {
                      const auto ca = a.count(), cb = b.count();
                      return ca != cb ? ca > cb : a < b;
                  });
        children.erase(std::unique(children.begin(), children.end()), children.end());
        for (const auto& c : children)
            if (exists(c, need - 1)) return true;
        if (it != failed_.end()) {
            it->second = need;
        } else {
            if (failed_.size() >= max_sets_)
                throw CapExceeded("chain search visited more than " + std::to_string(max_sets_) + " sets");
            failed_.emplace(top, need);
        }
        return false;
    }

private:
    std::vector<Bitset> gens_;
    std::size_t max_sets_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> failed_;
};

}  // namespace

std::size_t longest_intersection_chain(const std::vector<Bitset>& generators, const ClosureLimits& limits) {
    std::vector<Bitset> gens;
    for (const auto& g : generators)
        if (g.any()) gens.push_back(g);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    if (gens.empty()) return 0;

    // Every maximal chain tops out at a generator, and each step down can be
    // taken as an intersection with one more generator.
    ChainSearch search(gens, limits.max_sets);
    std::size_t best = 1;
    for (;;) {
        bool longer = false;
        for (const auto& g : gens)
            if (search.exists(g, best + 1)) {
                longer = true;
                break;
            }
        if (!longer) return best;
        ++best;
    }
}

std::size_t chain_height(const PartialSignMatrix& a, const ClosureLimits& limits) {
    std::vector<Bitset> gens;
    for (const auto& rs : row_supports(a)) {
        Bitset p(a.cols()), n(a.cols());
        for (auto c : rs.pos) p.set(c);
        for (auto c : rs.neg) n.set(c);
        gens.push_back(std::move(p));
        gens.push_back(std::move(n));
    }
    return longest_intersection_chain(gens, limits);
}

std::size_t ind_upper_chain_height(const PartialSignMatrix& a, const ClosureLimits& limits) {
    return 2 * chain_height(a, limits) - 1;
}

std::size_t phi_image_dimension(const PartialSignMatrix& a, const ClosureLimits& limits) {
    const Z2Complex s = sign_complex(a);
    std::vector<Bitset> gens;
    for (const auto& f : s.facets()) {
        Bitset b(s.n_vertices());
        for (Vertex v : f) b.set(v);
        gens.push_back(std::move(b));
    }
    return longest_intersection_chain(gens, limits) - 1;
}

IncidenceGraph facet_incidence_graph(const Z2Complex& k) {
    const auto& facets = k.facets();
    const std::size_t nv = k.n_vertices();
    std::unordered_map<Simplex, std::size_t, SimplexHash> index;
    for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i], i);
    std::vector<Simplex> edges;
    for (std::size_t f = 0; f < facets.size(); ++f)
        for (Vertex v : facets[f]) edges.push_back({v, static_cast<Vertex>(nv + f)});

    std::vector<Vertex> inv(nv + facets.size());
    for (Vertex v = 0; v < nv; ++v) inv[v] = Z2Complex::antipode(v);
    for (std::size_t f = 0; f < facets.size(); ++f)
        inv[nv + f] = static_cast<Vertex>(nv + index.at(Z2Complex::antipode(facets[f])));

    IncidenceGraph out;
    out.involution_free = true;
    for (std::size_t v = 0; v < inv.size(); ++v)
        if (inv[v] == v) out.involution_free = false;
    for (const auto& e : edges)
        if ((inv[e[0]] == e[0] && inv[e[1]] == e[1]) || (inv[e[0]] == e[1] && inv[e[1]] == e[0]))
            out.involution_free = false;
    out.graph = PlainComplex(inv.size(), std::move(edges));
    return out;
}

std::optional<std::size_t> facet_intersection_index_bound(const Z2Complex& k) {
    const auto& facets = k.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j) {
            std::size_t common = 0;
            auto x = facets[i].begin(), y = facets[j].begin();
            while (x != facets[i].end() && y != facets[j].end()) {
                if (*x < *y) ++x;
                else if (*y < *x) ++y;
                else ++common, ++x, ++y;
            }
            if (common > 1) return std::nullopt;
        }
    if (!facet_incidence_graph(k).involution_free) return std::nullopt;
    return 1;
}

std::string to_string(CoindProvenance p) {
    return p == CoindProvenance::Crosspolytope ? "crosspolytope" : "homological";
}

CoindBound coind_lower(const Z2Complex& k, const FaceLimits& limits, const ShatterLimits& shatter) {
    CoindBound out;
    const OmegaResult om = omega_diamond(k, shatter);
    out.omega = om.value;
    out.omega_exact = om.exact;
    out.value = static_cast<long>(om.value) - 1;
    try {
        const int hc = homological_connectivity(k.complex(), limits);
        if (hc != kAcyclic) {
            out.homological_connectivity = hc;
            if (hc + 1 > out.value) {
                out.value = hc + 1;
                out.provenance = CoindProvenance::Homological;
            }
        }
    } catch (const CapExceeded&) {
    }
    return out;
}

CoindBound coind_lower(const PartialSignMatrix& a, const FaceLimits& limits, const ShatterLimits& shatter) {
    return coind_lower(sign_complex(a), limits, shatter);
}

RealizationCheck verify_realization(const PartialSignMatrix& a, const Realization& r) {
    RealizationCheck out;
    auto fail = [&](std::string why) {
        out.ok = false;
        out.reason = std::move(why);
        return out;
    };
    if (r.rows.size() != a.rows() || r.cols.size() != a.cols()) return fail("vector counts do not match the matrix");
    auto bad = [&](const RationalVector& v) {
        return v.size() != r.d || std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
    };
    for (std::size_t i = 0; i < r.rows.size(); ++i)
        if (bad(r.rows[i])) return fail("row vector " + std::to_string(i) + " is zero or has the wrong dimension");
    for (std::size_t j = 0; j < r.cols.size(); ++j)
        if (bad(r.cols[j])) return fail("column vector " + std::to_string(j) + " is zero or has the wrong dimension");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Sign s = a.at(i, j);
            if (s == Sign::Star) continue;
            const int sg = sgn(dot(r.rows[i], r.cols[j]));
            if ((s == Sign::Plus && sg <= 0) || (s == Sign::Minus && sg >= 0)) {
                out.violation = {i, j};
                return fail("sign mismatch at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    return out;
}

Realization ghd_projection_realization(unsigned n, unsigned k, const GeneratorCaps& caps) {
    if (2 * k + 1 > n) throw InvalidInput("ghd_projection_realization requires 2k+1 <= n");
    if (n > caps.max_ghd_n) throw CapExceeded("ghd_projection_realization: n exceeds cap");
    Realization r;
    r.d = 2 * k + 1;
    const std::size_t dim = std::size_t{1} << n;
    for (std::size_t x = 0; x < dim; ++x) {
        RationalVector v(r.d);
        for (std::size_t i = 0; i < r.d; ++i) v[i] = ((x >> i) & 1U) ? -1 : 1;
        r.rows.push_back(v);
        r.cols.push_back(std::move(v));
    }
    return r;
}

namespace {

std::string facet_name(const PartialSignMatrix& a, std::size_t row, bool positive) {
    Simplex s = row_simplex(a, row);
    if (!positive) s = Z2Complex::antipode(s);
    std::ostringstream os;
    os << "sigma_" << row << (positive ? "+" : "-") << " {";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << Z2Complex::label(s[i]);
    os << "}";
    return os.str();
}

// Image of vertex j+ is v_j, of j- is -v_j.
RationalVector image_of(const LinearMap& g, Vertex v) {
    RationalVector x = g.columns.at(Z2Complex::pair_of(v));
    if (!Z2Complex::is_plus(v))
        for (auto& c : x) c = -c;
    return x;
}

void check_map_shape(const PartialSignMatrix& a, const LinearMap& g) {
    if (g.columns.size() != a.cols()) throw InvalidInput("linear map has the wrong number of columns");
    for (const auto& c : g.columns)
        if (c.size() != g.d) throw InvalidInput("linear map column has the wrong dimension");
}

}  // namespace

CertifiedMap realization_to_linear_map(const PartialSignMatrix& a, const Realization& r) {
    if (r.rows.size() != a.rows() || r.cols.size() != a.cols())
        throw InvalidInput("realization does not match the matrix shape");
    CertifiedMap out;
    out.map.d = r.d;
    out.map.columns = r.cols;
    check_map_shape(a, out.map);
    for (std::size_t row = 0; row < a.rows(); ++row) {
        if (r.rows[row].size() != r.d) throw InvalidInput("row vector has the wrong dimension");
        for (bool positive : {true, false}) {
            FacetCertificate fc;
            fc.row = row;
            fc.positive = positive;
            fc.facet = row_simplex(a, row);
            if (!positive) fc.facet = Z2Complex::antipode(fc.facet);
            fc.u = r.rows[row];
            if (!positive)
                for (auto& c : fc.u) c = -c;
            bool first = true;
            for (Vertex v : fc.facet) {
                mpq_class val = dot(fc.u, image_of(out.map, v));
                if (first || val < fc.min_value) fc.min_value = val;
                first = false;
            }
            if (fc.min_value <= 0)
                throw InvalidInput("origin avoidance fails on facet " + facet_name(a, row, positive));
            out.certificate.facets.push_back(std::move(fc));
        }
    }
    return out;
}

bool verify_certificate(const PartialSignMatrix& a, const CertifiedMap& m) {
    try {
        check_map_shape(a, m.map);
    } catch (const InvalidInput&) {
        return false;
    }
    std::unordered_map<Simplex, const FacetCertificate*, SimplexHash> by_facet;
    for (const auto& fc : m.certificate.facets) by_facet.emplace(fc.facet, &fc);
    const Z2Complex s = sign_complex(a);
    for (const auto& f : s.facets()) {
        auto it = by_facet.find(f);
        if (it == by_facet.end()) return false;
        if (it->second->u.size() != m.map.d) return false;
        for (Vertex v : f)
            if (dot(it->second->u, image_of(m.map, v)) <= 0) return false;
    }
    return true;
}

Realization linear_map_to_realization(const PartialSignMatrix& a, const LinearMap& g) {
    check_map_shape(a, g);
    Realization r;
    r.d = g.d;
    r.cols = g.columns;
    for (std::size_t row = 0; row < a.rows(); ++row) {
        std::vector<RationalVector> pts;
        for (Vertex v : row_simplex(a, row)) pts.push_back(image_of(g, v));
        Separation sep = separate_from_origin(pts, g.d);
        if (sep.margin <= 0)
            throw InvalidInput("origin lies in the image hull of facet " + facet_name(a, row, true));
        r.rows.push_back(std::move(sep.u));
    }
    return r;
}

Realization trivial_realization(const PartialSignMatrix& a) {
    Realization r;
    r.d = a.cols();
    for (std::size_t j = 0; j < a.cols(); ++j) {
        RationalVector e(r.d, 0);
        e[j] = 1;
        r.cols.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        RationalVector u(r.d, 0);
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == Sign::Plus) u[j] = 1;
            if (a.at(i, j) == Sign::Minus) u[j] = -1;
        }
        r.rows.push_back(std::move(u));
    }
    return r;
}

namespace {

RationalVector random_vector(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<int> dist(-4, 4);
    RationalVector v(d, 0);
    while (std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; }))
        for (auto& c : v) c = dist(rng);
    return v;
}

RationalVector signed_copy(const RationalVector& v, Sign s) {
    RationalVector out = v;
    if (s == Sign::Minus)
        for (auto& c : out) c = -c;
    return out;
}

bool separates(const RationalVector& u, const std::vector<RationalVector>& pts) {
    for (const auto& p : pts)
        if (dot(u, p) <= 0) return false;
    return true;
}

// Replace u by a nearby vector with short integer entries when one still
// separates exactly; keeps coefficient growth in check across rounds.
RationalVector compact(RationalVector u, const std::vector<RationalVector>& pts) {
    mpq_class big = 0;
    for (const auto& x : u) big = std::max(big, mpq_class(abs(x)));
    if (big == 0) return u;
    for (unsigned bits = 20; bits <= 60; bits += 20) {
        mpz_class scale = 1;
        scale <<= bits;
        RationalVector r(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            mpq_class scaled = u[i] * scale / big + mpq_class(1, 2);
            mpz_class z;
            mpz_fdiv_q(z.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
            r[i] = mpq_class(z);
        }
        if (separates(r, pts)) return primitive_integer(std::move(r));
    }
    return u;
}

// Largest numerator or denominator size in bits.
std::size_t max_bits(const std::vector<RationalVector>& vs) {
    std::size_t b = 0;
    for (const auto& v : vs)
        for (const auto& x : v)
            b = std::max({b, mpz_sizeinbase(x.get_num_mpz_t(), 2), mpz_sizeinbase(x.get_den_mpz_t(), 2)});
    return b;
}

std::optional<Realization> search_in_dimension(const PartialSignMatrix& a, std::size_t d, std::mt19937_64& rng,
                                               const SrankSearchOptions& opts) {
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t restart = 0; restart < opts.restarts; ++restart) {
        std::vector<RationalVector> cols(n);
        for (auto& v : cols) v = random_vector(rng, d);
        std::vector<RationalVector> rows(m);
        std::size_t best_good = 0, stalled = 0;
        for (std::size_t it = 0; it < opts.iters; ++it) {
            std::vector<char> good(m, 0);
            std::size_t n_good = 0;
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<RationalVector> pts;
                for (std::size_t j = 0; j < n; ++j)
                    if (a.at(i, j) != Sign::Star) pts.push_back(signed_copy(cols[j], a.at(i, j)));
                Separation sep = separate_from_origin(pts, d);
                if (sep.margin > 0) {
                    rows[i] = compact(std::move(sep.u), pts);
                    good[i] = 1;
                    ++n_good;
                } else {
                    rows[i] = random_vector(rng, d);
                }
            }
            if (n_good == m) {
                Realization r{d, rows, cols};
                if (verify_realization(a, r).ok) return r;
            }
            if (n_good > best_good) best_good = n_good, stalled = 0;
            else if (++stalled >= 4) break;
            if (max_bits(rows) > 256) break;

            for (std::size_t j = 0; j < n; ++j) {
                // Try to satisfy every row; fall back to the rows already separated.
                for (int pass = 0; pass < 2; ++pass) {
                    std::vector<RationalVector> pts;
                    for (std::size_t i = 0; i < m; ++i)
                        if (a.at(i, j) != Sign::Star && (pass == 0 || good[i]))
                            pts.push_back(signed_copy(rows[i], a.at(i, j)));
                    if (pts.empty()) break;
                    Separation sep = separate_from_origin(pts, d);
                    if (sep.margin > 0) {
                        cols[j] = compact(std::move(sep.u), pts);
                        break;
                    }
                }
            }
            if (max_bits(cols) > 256) break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Realization> srank_upper_search(const PartialSignMatrix& a, const SrankSearchOptions& opts) {
    std::mt19937_64 rng(opts.seed);
    const std::size_t top = std::min(opts.d_max, a.cols() - 1);
    for (std::size_t d = std::max<std::size_t>(1, opts.d_min); d <= top; ++d)
        if (auto r = search_in_dimension(a, d, rng, opts)) return r;
    if (opts.d_max >= a.cols()) return trivial_realization(a);
    return std::nullopt;
}

}  // namespace signtope
