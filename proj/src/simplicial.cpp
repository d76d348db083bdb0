#include "signtope/simplicial.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "signtope/error.hpp"

namespace signtope {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
    std::size_t h = s.size();
    for (Vertex v : s) h ^= std::hash<Vertex>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

bool is_subface(const Simplex& a, const Simplex& b) {
    return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

Bitset to_bitset(const Simplex& s, std::size_t n) {
    Bitset b(n);
    for (Vertex v : s) b.set(v);
    return b;
}

// Calls f(subset) for every size-s subset of `set`, in lexicographic order.
template <typename F>
void for_each_subset(const Simplex& set, std::size_t s, F&& f) {
    const std::size_t n = set.size();
    if (s > n || s == 0) return;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    Simplex sub(s);
    while (true) {
        for (std::size_t i = 0; i < s; ++i) sub[i] = set[idx[i]];
        f(sub);
        std::size_t i = s;
        while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void normalize(Simplex& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace

std::vector<Simplex> maximal_elements(std::vector<Simplex> sets, std::size_t n_vertices) {
    std::sort(sets.begin(), sets.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Simplex> kept;
    std::vector<Bitset> kept_bits;
    std::size_t larger_end = 0;  // kept[0, larger_end) are strictly larger than the current set
    for (auto& s : sets) {
        while (larger_end < kept.size() && kept[larger_end].size() > s.size()) ++larger_end;
        Bitset b = to_bitset(s, n_vertices);
        bool absorbed = false;
        for (std::size_t i = 0; i < larger_end && !absorbed; ++i) absorbed = b.is_subset_of(kept_bits[i]);
        if (absorbed) continue;
        kept.push_back(std::move(s));
        kept_bits.push_back(std::move(b));
    }
    return kept;
}

PlainComplex::PlainComplex(std::size_t n_vertices, std::vector<Simplex> generators) : n_vertices_(n_vertices) {
    for (auto& g : generators) {
        normalize(g);
        if (g.empty()) throw InvalidInput("complex: empty generator simplex");
        if (g.back() >= n_vertices_) throw InvalidInput("complex: vertex id out of range");
    }
    facets_ = maximal_elements(std::move(generators), n_vertices_);
}

int PlainComplex::dimension() const noexcept {
    // facets_ is sorted by size descending
    return facets_.empty() ? -1 : static_cast<int>(facets_.front().size()) - 1;
}

bool PlainComplex::contains(const Simplex& s) const {
    if (s.empty()) return !facets_.empty();
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return is_subface(s, f); });
}

std::vector<std::vector<Simplex>> PlainComplex::faces(int max_dim, const FaceLimits& limits) const {
    const int top = max_dim < 0 ? dimension() : std::min(max_dim, dimension());
    std::vector<std::vector<Simplex>> out(static_cast<std::size_t>(std::max(top + 1, 0)));
    if (top < 0) return out;
    std::vector<std::unordered_set<Simplex, SimplexHash>> seen(out.size());
    std::size_t total = 0;
    std::size_t work = 0;
    const std::size_t work_cap = limits.max_faces * 64;
    for (const auto& f : facets_) {
        const std::size_t top_size = std::min<std::size_t>(f.size(), static_cast<std::size_t>(top) + 1);
        for (std::size_t s = 1; s <= top_size; ++s) {
            for_each_subset(f, s, [&](const Simplex& sub) {
                if (++work > work_cap) throw CapExceeded("face enumeration exceeded work cap");
                if (seen[s - 1].insert(sub).second && ++total > limits.max_faces)
                    throw CapExceeded("face count exceeds cap " + std::to_string(limits.max_faces));
            });
        }
    }
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d].assign(seen[d].begin(), seen[d].end());
        std::sort(out[d].begin(), out[d].end());
    }
    return out;
}

std::vector<std::size_t> PlainComplex::f_vector(int max_dim, const FaceLimits& limits) const {
    auto fs = faces(max_dim, limits);
    std::vector<std::size_t> out;
    for (const auto& level : fs) out.push_back(level.size());
    return out;
}

// ---------------------------------------------------------------------------
// Z2Complex

Z2Complex::Z2Complex(std::size_t n_pairs, std::vector<Simplex> generators) : n_pairs_(n_pairs) {
    const std::size_t n = generators.size();
    generators.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        normalize(generators[i]);
        for (std::size_t a = 1; a < generators[i].size(); ++a)
            if (pair_of(generators[i][a]) == pair_of(generators[i][a - 1]))
                throw InvalidInput("Z2 complex: simplex contains both " + label(generators[i][a - 1]) + " and " +
                                   label(generators[i][a]));
        generators.push_back(antipode(generators[i]));
    }
    complex_ = PlainComplex(2 * n_pairs_, std::move(generators));
}

Simplex Z2Complex::antipode(const Simplex& s) {
    Simplex t(s.size());
    std::transform(s.begin(), s.end(), t.begin(), [](Vertex v) { return v ^ 1U; });
    std::sort(t.begin(), t.end());
    return t;
}

std::string Z2Complex::label(Vertex v) {
    return std::to_string(pair_of(v) + 1) + (is_plus(v) ? "+" : "-");
}

Z2Complex Z2Complex::from_involution(std::size_t n_vertices, std::vector<Simplex> generators,
                                     const std::vector<Vertex>& involution, std::vector<Vertex>* relabel) {
    if (involution.size() != n_vertices) throw InvalidInput("involution size does not match vertex count");
    std::vector<Vertex> map(n_vertices, 0);
    std::vector<bool> done(n_vertices, false);
    std::size_t pairs = 0;
    for (Vertex v = 0; v < n_vertices; ++v) {
        if (done[v]) continue;
        Vertex w = involution[v];
        if (w >= n_vertices || involution[w] != v) throw InvalidInput("involution is not an involution");
        if (w == v) throw InvalidInput("involution fixes vertex " + std::to_string(v));
        map[v] = plus(pairs);
        map[w] = minus(pairs);
        done[v] = done[w] = true;
        ++pairs;
    }
    for (auto& g : generators)
        for (auto& v : g) {
            if (v >= n_vertices) throw InvalidInput("vertex id out of range");
            v = map[v];
        }
    if (relabel) *relabel = map;
    return Z2Complex(pairs, std::move(generators));
}

// ---------------------------------------------------------------------------
// Constructions

FacePoset face_poset(const PlainComplex& k, const FaceLimits& limits) {
    FacePoset p;
    for (auto& level : k.faces(-1, limits))
        for (auto& f : level) p.elements.push_back(std::move(f));
    return p;
}

Z2Complex crosspolytope_boundary(std::size_t d) {
    if (d == 0) throw InvalidInput("crosspolytope boundary requires d >= 1");
    if (d > 24) throw CapExceeded("crosspolytope boundary: d > 24");
    std::vector<Simplex> facets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        Simplex f(d);
        for (std::size_t j = 0; j < d; ++j) f[j] = ((mask >> j) & 1U) ? Z2Complex::minus(j) : Z2Complex::plus(j);
        facets.push_back(std::move(f));
    }
    return Z2Complex(d, std::move(facets));
}

Z2Complex deleted_join_simplex(std::size_t d) {
    if (d == 0) throw InvalidInput("deleted join requires d >= 1");
    if (d > 24) throw CapExceeded("deleted join: d > 24");
    // Vertex (copy c, element j) has id c*d + j. A simplex of the deleted join
    // is a pair of disjoint faces, one from each copy; facets split [d] in two.
    const auto n = static_cast<Vertex>(2 * d);
    std::vector<Vertex> involution(n);
    for (Vertex v = 0; v < n; ++v) involution[v] = v < d ? v + static_cast<Vertex>(d) : v - static_cast<Vertex>(d);
    std::vector<Simplex> facets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        Simplex f;
        for (std::size_t j = 0; j < d; ++j)
            f.push_back(static_cast<Vertex>(((mask >> j) & 1U) ? d + j : j));
        facets.push_back(std::move(f));
    }
    return Z2Complex::from_involution(n, std::move(facets), involution);
}

PlainComplex skeleton(const PlainComplex& k, int r) {
    if (r < 0) throw InvalidInput("skeleton dimension must be >= 0");
    const std::size_t size = static_cast<std::size_t>(r) + 1;
    std::unordered_set<Simplex, SimplexHash> out;
    for (const auto& f : k.facets()) {
        if (f.size() <= size) out.insert(f);
        else for_each_subset(f, size, [&](const Simplex& s) { out.insert(s); });
    }
    return PlainComplex(k.n_vertices(), std::vector<Simplex>(out.begin(), out.end()));
}

Z2Complex skeleton(const Z2Complex& k, int r) {
    return Z2Complex(k.n_pairs(), skeleton(k.complex(), r).facets());
}

PlainComplex order_complex(const FacePoset& p, int max_dim) {
    const std::size_t n = p.elements.size();
    // below[i][j]: elements[j] strictly contained in elements[i]
    std::vector<std::vector<std::size_t>> up(n), down(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.elements[i] != p.elements[j] && is_subface(p.elements[i], p.elements[j]))
                up[i].push_back(j), down[j].push_back(i);

    auto is_cover = [&](std::size_t a, std::size_t b) {
        return std::none_of(up[a].begin(), up[a].end(), [&](std::size_t c) {
            return c != b && std::find(down[b].begin(), down[b].end(), c) != down[b].end();
        });
    };

    std::vector<Simplex> chains;
    const std::size_t limit = max_dim < 0 ? n + 1 : static_cast<std::size_t>(max_dim) + 1;
    Simplex chain;
    // Maximal chains (cover steps from a minimal to a maximal element) that fit the limit.
    auto maximal_dfs = [&](auto&& self, std::size_t at) -> void {
        chain.push_back(static_cast<Vertex>(at));
        if (chain.size() <= limit) {
            bool extended = false;
            for (std::size_t nxt : up[at])
                if (is_cover(at, nxt)) {
                    extended = true;
                    self(self, nxt);
                }
            if (!extended) chains.push_back(chain);
        }
        chain.pop_back();
    };
    for (std::size_t i = 0; i < n; ++i)
        if (down[i].empty()) maximal_dfs(maximal_dfs, i);
    if (max_dim >= 0) {
        // Every chain of length exactly max_dim + 1 is a facet of the skeleton.
        auto exact_dfs = [&](auto&& self, std::size_t at) -> void {
            chain.push_back(static_cast<Vertex>(at));
            if (chain.size() == limit) chains.push_back(chain);
            else
                for (std::size_t nxt : up[at]) self(self, nxt);
            chain.pop_back();
        };
        for (std::size_t i = 0; i < n; ++i) exact_dfs(exact_dfs, i);
    }
    return PlainComplex(n, std::move(chains));
}

namespace {

// Facets of the (max_dim)-skeleton of sd(K), as chains of face indices.
std::vector<Simplex> subdivision_chains(const PlainComplex& k, const std::vector<Simplex>& faces, int max_dim,
                                        const FaceLimits& limits) {
    std::unordered_map<Simplex, Vertex, SimplexHash> index;
    index.reserve(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], static_cast<Vertex>(i));

    std::vector<Simplex> chains;
    auto push = [&](Simplex c) {
        if (chains.size() >= limits.max_faces) throw CapExceeded("barycentric subdivision exceeds facet cap");
        chains.push_back(std::move(c));
    };

    // Full flags of each facet F are the maximal chains.
    auto full_flags = [&](const Simplex& f) {
        Simplex order = f;
        do {
            Simplex chain;
            Simplex prefix;
            for (Vertex v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(index.at(prefix));
            }
            push(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    };

    if (max_dim < 0) {
        for (const auto& f : k.facets()) full_flags(f);
        return chains;
    }
    const std::size_t len = static_cast<std::size_t>(max_dim) + 1;
    for (const auto& f : k.facets())
        if (f.size() < len) full_flags(f);
    // All chains with exactly len elements, built downward from the top face.
    Simplex chain;
    auto down = [&](auto&& self, const Simplex& top) -> void {
        chain.push_back(index.at(top));
        if (chain.size() == len) {
            Simplex c(chain.rbegin(), chain.rend());
            push(std::move(c));
        } else if (top.size() > 1) {
            for (std::size_t s = top.size() - 1; s >= 1; --s)
                for_each_subset(top, s, [&](const Simplex& sub) { self(self, sub); });
        }
        chain.pop_back();
    };
    for (const auto& f : faces)
        if (f.size() >= len) down(down, f);
    return chains;
}

}  // namespace

PlainComplex barycentric_subdivision(const PlainComplex& k, int max_dim, const FaceLimits& limits) {
    auto faces = face_poset(k, limits).elements;
    auto chains = subdivision_chains(k, faces, max_dim, limits);
    return PlainComplex(faces.size(), std::move(chains));
}

Z2Complex barycentric_subdivision(const Z2Complex& k, int max_dim, const FaceLimits& limits) {
    auto faces = face_poset(k.complex(), limits).elements;
    std::unordered_map<Simplex, Vertex, SimplexHash> index;
    for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], static_cast<Vertex>(i));
    std::vector<Vertex> involution(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) involution[i] = index.at(Z2Complex::antipode(faces[i]));
    auto chains = subdivision_chains(k.complex(), faces, max_dim, limits);
    return Z2Complex::from_involution(faces.size(), std::move(chains), involution);
}

PlainComplex nerve(const std::vector<Simplex>& cover) {
    Vertex max_v = 0;
    for (const auto& c : cover)
        for (Vertex v : c) max_v = std::max(max_v, v);
    // Members containing each base vertex; those sets generate the nerve.
    std::vector<Simplex> stars(static_cast<std::size_t>(max_v) + 1);
    for (std::size_t i = 0; i < cover.size(); ++i)
        for (Vertex v : cover[i]) stars[v].push_back(static_cast<Vertex>(i));
    std::vector<Simplex> gens;
    for (auto& s : stars)
        if (!s.empty()) gens.push_back(std::move(s));
    return PlainComplex(cover.size(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Equivariant isomorphism

namespace {

struct IsoData {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> cooc;        // facets containing both u and v
    std::vector<std::vector<std::size_t>> size_profile;  // sorted facet sizes through v
    std::unordered_set<Simplex, SimplexHash> facet_set;

    explicit IsoData(const Z2Complex& k) : n(k.n_vertices()), cooc(n, std::vector<std::size_t>(n, 0)), size_profile(n) {
        for (const auto& f : k.facets()) {
            facet_set.insert(f);
            for (Vertex u : f) {
                size_profile[u].push_back(f.size());
                for (Vertex v : f) ++cooc[u][v];
            }
        }
        for (auto& p : size_profile) std::sort(p.begin(), p.end());
    }
};

}  // namespace

IsomorphismResult equivariant_isomorphic(const Z2Complex& a, const Z2Complex& b, const IsomorphismLimits& limits) {
    for (const Z2Complex* k : {&a, &b})
        if (k->n_pairs() > limits.max_pairs || k->facets().size() > limits.max_facets)
            throw CapExceeded("equivariant isomorphism: complex exceeds size cap");
    if (a.n_pairs() != b.n_pairs() || a.facets().size() != b.facets().size()) return {};
    {
        std::vector<std::size_t> sa, sb;
        for (const auto& f : a.facets()) sa.push_back(f.size());
        for (const auto& f : b.facets()) sb.push_back(f.size());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return {};
    }
    const IsoData da(a), db(b);
    const std::size_t pairs = a.n_pairs();

    // Facets of `a` become checkable once their highest pair is assigned.
    std::vector<std::vector<const Simplex*>> ready(pairs);
    for (const auto& f : a.facets()) ready[Z2Complex::pair_of(f.back())].push_back(&f);

    std::vector<Vertex> map(2 * pairs, 0);
    std::vector<bool> used(pairs, false);

    auto consistent = [&](Vertex v, Vertex w, std::size_t upto_pair) {
        if (da.size_profile[v] != db.size_profile[w]) return false;
        for (Vertex u = 0; u < 2 * upto_pair; ++u)
            if (da.cooc[u][v] != db.cooc[map[u]][w]) return false;
        return true;
    };

    auto search = [&](auto&& self, std::size_t j) -> bool {
        if (j == pairs) return true;
        for (std::size_t p = 0; p < pairs; ++p) {
            if (used[p]) continue;
            for (int s = 0; s < 2; ++s) {
                Vertex wp = s == 0 ? Z2Complex::plus(p) : Z2Complex::minus(p);
                Vertex wm = Z2Complex::antipode(wp);
                if (!consistent(Z2Complex::plus(j), wp, j) || !consistent(Z2Complex::minus(j), wm, j)) continue;
                map[Z2Complex::plus(j)] = wp;
                map[Z2Complex::minus(j)] = wm;
                bool ok = true;
                for (const Simplex* f : ready[j]) {
                    Simplex img(f->size());
                    std::transform(f->begin(), f->end(), img.begin(), [&](Vertex v) { return map[v]; });
                    std::sort(img.begin(), img.end());
                    if (!db.facet_set.count(img)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                used[p] = true;
                if (self(self, j + 1)) return true;
                used[p] = false;
            }
        }
        return false;
    };
    if (!search(search, 0)) return {};
    return {true, map};
}

// ---------------------------------------------------------------------------
// Quotients and double covers

bool antipodes_within_distance_two(const Z2Complex& k) {
    const std::size_t n = k.n_vertices();
    std::vector<Bitset> nbr(n, Bitset(n));
    for (const auto& f : k.facets())
        for (Vertex u : f)
            for (Vertex v : f)
                if (u != v) nbr[u].set(v);
    for (Vertex v = 0; v < n; v += 2)
        if (nbr[v].intersects(nbr[v + 1])) return true;
    return false;
}

Quotient quotient(const Z2Complex& k, int max_dim, const FaceLimits& limits) {
    Quotient q;
    q.subdivided = antipodes_within_distance_two(k);
    Z2Complex work = q.subdivided ? barycentric_subdivision(k, max_dim, limits)
                                  : (max_dim >= 0 ? skeleton(k, max_dim) : k);
    std::vector<Simplex> images;
    images.reserve(work.facets().size());
    for (const auto& f : work.facets()) {
        Simplex img(f.size());
        std::transform(f.begin(), f.end(), img.begin(), [](Vertex v) { return static_cast<Vertex>(Z2Complex::pair_of(v)); });
        std::sort(img.begin(), img.end());
        images.push_back(std::move(img));
    }
    q.complex = PlainComplex(work.n_pairs(), std::move(images));
    q.cover_cocycle.dim = 1;
    auto edges = work.complex().faces(1, limits);
    if (edges.size() < 2) return q;
    std::unordered_set<Simplex, SimplexHash> lifted(edges[1].begin(), edges[1].end());
    auto qedges = q.complex.faces(1, limits);
    for (const auto& e : qedges[1]) {
        Simplex same{Z2Complex::plus(e[0]), Z2Complex::plus(e[1])};
        if (!lifted.count(same)) q.cover_cocycle.support.insert(e);
    }
    return q;
}

namespace {

void check_edge_cochain(const PlainComplex& t, const Cochain& w, const std::vector<std::vector<Simplex>>& faces) {
    if (w.dim != 1) throw InvalidInput("double cover cochain must have degree 1");
    for (const auto& e : w.support)
        if (e.size() != 2 || faces.size() < 2 || !std::binary_search(faces[1].begin(), faces[1].end(), e))
            throw InvalidInput("cochain support contains a non-edge");
    (void)t;
}

}  // namespace

bool is_edge_coboundary(const PlainComplex& t, const Cochain& w) {
    auto faces = t.faces(1);
    check_edge_cochain(t, w, faces);
    const std::size_t n = t.n_vertices();
    std::vector<std::vector<std::pair<Vertex, int>>> adj(n);
    if (faces.size() > 1)
        for (const auto& e : faces[1]) {
            int bit = w.value(e) ? 1 : 0;
            adj[e[0]].emplace_back(e[1], bit);
            adj[e[1]].emplace_back(e[0], bit);
        }
    std::vector<int> sheet(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (sheet[s] >= 0) continue;
        sheet[s] = 0;
        std::queue<Vertex> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            Vertex u = bfs.front();
            bfs.pop();
            for (auto [v, bit] : adj[u]) {
                int want = sheet[u] ^ bit;
                if (sheet[v] < 0) {
                    sheet[v] = want;
                    bfs.push(v);
                } else if (sheet[v] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

DoubleCover lift_double_cover(const PlainComplex& t, const Cochain& w) {
    auto faces = t.faces(2);
    check_edge_cochain(t, w, faces);
    auto val = [&](Vertex a, Vertex b) -> Vertex {
        Simplex e = a < b ? Simplex{a, b} : Simplex{b, a};
        return w.value(e) ? 1U : 0U;
    };
    if (faces.size() > 2)
        for (const auto& tri : faces[2])
            if ((val(tri[0], tri[1]) ^ val(tri[1], tri[2]) ^ val(tri[0], tri[2])) != 0)
                throw InvalidInput("cochain is not a cocycle on triangle " + std::to_string(tri[0]) + " " +
                                   std::to_string(tri[1]) + " " + std::to_string(tri[2]));
    std::vector<Simplex> gens;
    for (const auto& f : t.facets()) {
        Simplex lift;
        for (Vertex v : f) lift.push_back(2 * v + (v == f.front() ? 0U : val(f.front(), v)));
        gens.push_back(std::move(lift));
    }
    DoubleCover out;
    out.complex = Z2Complex(t.n_vertices(), std::move(gens));
    out.trivial = is_edge_coboundary(t, w);
    return out;
}

PlainComplex rp2_six_vertex() {
    return PlainComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                            {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

// ---------------------------------------------------------------------------
// Text formats

void write_facets(std::ostream& os, const Z2Complex& k) {
    os << "pairs " << k.n_pairs() << '\n';
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << Z2Complex::label(f[i]);
        os << '\n';
    }
}

void write_facets(std::ostream& os, const PlainComplex& k) {
    os << "vertices " << k.n_vertices() << '\n';
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
        os << '\n';
    }
}

std::string format_facets(const Z2Complex& k) {
    std::ostringstream os;
    write_facets(os, k);
    return os.str();
}

std::string format_facets(const PlainComplex& k) {
    std::ostringstream os;
    write_facets(os, k);
    return os.str();
}

namespace {

std::size_t read_header(std::istream& is, const std::string& keyword) {
    std::string line;
    while (std::getline(is, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    std::istringstream hs(line);
    std::string word;
    long long n = -1;
    std::string extra;
    if (!(hs >> word >> n) || word != keyword || n < 0 || (hs >> extra))
        throw ParseError("facet list: expected header '" + keyword + " N'");
    return static_cast<std::size_t>(n);
}

Vertex parse_label(const std::string& tok, std::size_t pairs) {
    std::string body = tok;
    bool plus;
    // U+2212 MINUS SIGN is accepted as well as ASCII '-'.
    static const std::string kUnicodeMinus = "\xE2\x88\x92";
    if (body.size() > kUnicodeMinus.size() && body.compare(body.size() - 3, 3, kUnicodeMinus) == 0) {
        plus = false;
        body.resize(body.size() - 3);
    } else if (!body.empty() && (body.back() == '+' || body.back() == '-')) {
        plus = body.back() == '+';
        body.pop_back();
    } else {
        throw ParseError("facet list: bad vertex label '" + tok + "'");
    }
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("facet list: bad vertex label '" + tok + "'");
    unsigned long j = std::stoul(body);
    if (j < 1 || j > pairs) throw ParseError("facet list: pair index out of range in '" + tok + "'");
    return plus ? Z2Complex::plus(j - 1) : Z2Complex::minus(j - 1);
}

}  // namespace

Z2Complex parse_z2_facets(std::istream& is) {
    std::size_t pairs = read_header(is, "pairs");
    std::vector<Simplex> gens;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        Simplex f;
        std::string tok;
        while (ls >> tok) f.push_back(parse_label(tok, pairs));
        if (!f.empty()) gens.push_back(std::move(f));
    }
    try {
        return Z2Complex(pairs, std::move(gens));
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("facet list: ") + e.what());
    }
}

Z2Complex parse_z2_facets(const std::string& text) {
    std::istringstream is(text);
    return parse_z2_facets(is);
}

PlainComplex parse_plain_facets(std::istream& is) {
    std::size_t n = read_header(is, "vertices");
    std::vector<Simplex> gens;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        Simplex f;
        std::string tok;
        while (ls >> tok) {
            if (tok.find_first_not_of("0123456789") != std::string::npos) throw ParseError("facet list: bad vertex '" + tok + "'");
            f.push_back(static_cast<Vertex>(std::stoul(tok)));
        }
        if (!f.empty()) gens.push_back(std::move(f));
    }
    try {
        return PlainComplex(n, std::move(gens));
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("facet list: ") + e.what());
    }
}

PlainComplex parse_plain_facets(const std::string& text) {
    std::istringstream is(text);
    return parse_plain_facets(is);
}

}  // namespace signtope
