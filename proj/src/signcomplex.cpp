#include "signtope/signcomplex.hpp"

#include <algorithm>
#include <unordered_map>

#include "signtope/error.hpp"
#include "signtope/vrcube.hpp"

namespace signtope {

Simplex row_simplex(const PartialSignMatrix& a, std::size_t row) {
    Simplex s;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (a.at(row, c) == Sign::Plus) s.push_back(Z2Complex::plus(c));
        else if (a.at(row, c) == Sign::Minus) s.push_back(Z2Complex::minus(c));
    }
    return s;
}

SignComplex build_sign_complex(const PartialSignMatrix& a) {
    std::vector<Simplex> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) rows[r] = row_simplex(a, r);
    SignComplex out{Z2Complex(a.cols(), rows), {}};
    const auto& facets = out.complex.facets();
    std::unordered_map<Simplex, std::size_t, SimplexHash> index;
    for (std::size_t i = 0; i < facets.size(); ++i) index.emplace(facets[i], i);
    out.row_facet.resize(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (auto it = index.find(rows[r]); it != index.end()) {
            out.row_facet[r] = it->second;
            continue;
        }
        auto f = std::find_if(facets.begin(), facets.end(), [&](const Simplex& s) { return is_subface(rows[r], s); });
        out.row_facet[r] = static_cast<std::size_t>(f - facets.begin());
    }
    return out;
}

Z2Complex sign_complex(const PartialSignMatrix& a) { return build_sign_complex(a).complex; }

PartialSignMatrix matrix_from_complex(const Z2Complex& k) {
    std::vector<Simplex> reps;
    for (const auto& f : k.facets()) {
        Simplex g = Z2Complex::antipode(f);
        if (f < g) reps.push_back(f);
    }
    std::sort(reps.begin(), reps.end());
    if (reps.empty()) throw InvalidInput("matrix_from_complex: complex has no facets");
    std::vector<Sign> e(reps.size() * k.n_pairs(), Sign::Star);
    for (std::size_t r = 0; r < reps.size(); ++r)
        for (Vertex v : reps[r]) e[r * k.n_pairs() + Z2Complex::pair_of(v)] = Z2Complex::is_plus(v) ? Sign::Plus : Sign::Minus;
    return {reps.size(), k.n_pairs(), std::move(e)};
}

Z2Complex row_cover_nerve(const PartialSignMatrix& a) {
    if (std::size_t c = a.first_all_star_column(); c != a.cols())
        throw InvalidInput("row_cover_nerve: column " + std::to_string(c) + " has no specified entry");
    std::vector<Simplex> cover(2 * a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        cover[Z2Complex::plus(r)] = row_simplex(a, r);
        cover[Z2Complex::minus(r)] = Z2Complex::antipode(cover[Z2Complex::plus(r)]);
    }
    PlainComplex n = nerve(cover);
    return Z2Complex(a.rows(), n.facets());
}

VertexMapCheck ghd_vertex_map_check(unsigned n, unsigned k, const GeneratorCaps& caps) {
    const PartialSignMatrix g = ghd(n, k, caps);
    const Z2Complex s = sign_complex(g);
    const CubeComplex vr = vr_cube(n, k);
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t all = dim - 1;
    VertexMapCheck out;
    for (const auto& facet : vr.plain.facets()) {
        ++out.facets_checked;
        // A ball B(x0,k) containing the facet; its complement lies in B(~x0,k).
        bool centred = false;
        for (std::size_t x0 = 0; x0 < dim && !centred; ++x0)
            centred = std::all_of(facet.begin(), facet.end(), [&](Vertex y) {
                return hamming(x0, y) <= k && hamming(all ^ x0, all ^ y) <= k;
            });
        Simplex image;
        for (Vertex y : facet) {
            image.push_back(Z2Complex::minus(y));
            image.push_back(Z2Complex::plus(all ^ y));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (!centred || !s.contains(image)) {
            out.ok = false;
            out.failing_facet = std::vector<std::size_t>(facet.begin(), facet.end());
            return out;
        }
    }
    return out;
}

}  // namespace signtope
