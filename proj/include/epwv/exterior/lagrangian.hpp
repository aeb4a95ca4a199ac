#pragma once
// The distinguished Lagrangian 10-space A in grade-3: built either as the
// span of the Plucker vectors of the 20 incident planes or as the span of
// the signed permutation orbit of e0^e1^e2 - e3^e4^e5 under the twisted S5
// inside S6 (the "beta" copy). Both constructions agree; the orbit gives the
// canonical ordered basis.

#include <algorithm>
#include <set>
#include <vector>

#include "epwv/exact/perm.hpp"
#include "epwv/exterior/plane.hpp"
#include "epwv/exterior/wedge.hpp"

namespace epwv::exterior {

using exact::Perm;

// Generators of the twisted S5 inside S6 (images of the adjacent
// transpositions (12),(23),(34),(45)).
inline const std::vector<Perm<6>>& beta_generators() {
    static const std::vector<Perm<6>> gens = [] {
        auto p = [](int a0, int b0, int a1, int b1, int a2, int b2) {
            Perm<6> g;
            std::swap(g.map[a0], g.map[b0]);
            std::swap(g.map[a1], g.map[b1]);
            std::swap(g.map[a2], g.map[b2]);
            return g;
        };
        return std::vector<Perm<6>>{
            p(0, 3, 1, 4, 2, 5),   // beta_12 = (03)(14)(25)
            p(0, 1, 2, 4, 3, 5),   // beta_23 = (01)(24)(35)
            p(0, 5, 1, 4, 2, 3),   // beta_34 = (05)(14)(23)
            p(0, 1, 2, 5, 3, 4)};  // beta_45 = (01)(25)(34)
    }();
    return gens;
}

// The order-120 twisted S5 subgroup generated by the betas.
inline const std::set<Perm<6>>& beta_sigma5_group() {
    static const auto g = exact::permutation_closure<6>(beta_generators());
    return g;
}

// Signed action of a coordinate permutation on grade-3 vectors:
// e_a^e_b^e_c -> e_{p(a)}^e_{p(b)}^e_{p(c)} resorted with sign.
inline Wedge3 act3(const Perm<6>& p, const Wedge3& w) {
    Wedge3 out{};
    const auto& s3 = subsets3();
    for (int k = 0; k < 20; ++k) {
        if (w[k].is_zero()) continue;
        std::array<int, 3> img = {p(s3[k][0]), p(s3[k][1]), p(s3[k][2])};
        int sgn = sort_sign(img);
        out[index3(img[0], img[1], img[2])] += Gq(sgn) * w[k];
    }
    return out;
}

// Canonical representative of {w, -w}: first nonzero coordinate positive
// (lexicographic order on Gaussian rationals).
inline Wedge3 canon_wedge3(Wedge3 w) {
    for (const auto& x : w) {
        if (x.is_zero()) continue;
        if (x < Gq(0)) return w3_scaled(w, Gq(-1));
        return w;
    }
    return w;
}

// Orbit of a grade-3 vector under the group generated by `gens`, collected
// up to sign and sorted ascending (deterministic basis order).
inline std::vector<Wedge3> wedge_orbit_up_to_sign(
    const Wedge3& seed, const std::vector<Perm<6>>& gens) {
    std::set<Wedge3> orb{canon_wedge3(seed)};
    std::vector<Wedge3> frontier{canon_wedge3(seed)};
    while (!frontier.empty()) {
        std::vector<Wedge3> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Wedge3 img = canon_wedge3(act3(g, w));
                if (orb.insert(img).second) next.push_back(img);
            }
        frontier = std::move(next);
    }
    return {orb.begin(), orb.end()};
}

// e0^e1^e2 + eps * e3^e4^e5.
inline Wedge3 split_seed(int eps) {
    Wedge3 w{};
    w[index3(0, 1, 2)] = Gq(1);
    w[index3(3, 4, 5)] = Gq(eps);
    return w;
}

// Canonical ordered basis of A: the 10 sign-canonical vectors of the beta
// orbit of e0^e1^e2 - e3^e4^e5, ascending.
inline const std::vector<Wedge3>& canonical_lagrangian_basis() {
    static const auto basis =
        wedge_orbit_up_to_sign(split_seed(-1), beta_generators());
    return basis;
}

// Row space of a family of grade-3 vectors in reduced echelon form; the
// nonzero rows are a canonical basis of the span.
inline Matrix<Gq> wedge_row_space(const std::vector<Wedge3>& vecs) {
    Matrix<Gq> m(vecs.size(), 20);
    for (std::size_t r = 0; r < vecs.size(); ++r)
        for (int c = 0; c < 20; ++c) m(r, c) = vecs[r][c];
    auto [rank, pivots] = exact::rref_in_place(m);
    Matrix<Gq> out(rank, 20);
    for (std::size_t r = 0; r < rank; ++r)
        for (int c = 0; c < 20; ++c) out(r, c) = m(r, c);
    return out;
}

struct SpanIsotropy {
    std::size_t dimension = 0;
    bool isotropic = false;
    std::vector<Wedge3> basis;  // echelon basis of the span
};

// Span and isotropy of the Plucker vectors of a family of planes.
inline SpanIsotropy span_and_isotropy(const std::vector<Plane>& planes) {
    std::vector<Wedge3> vecs;
    vecs.reserve(planes.size());
    for (const auto& p : planes) vecs.push_back(p.plucker());
    Matrix<Gq> ech = wedge_row_space(vecs);
    SpanIsotropy out;
    out.dimension = ech.rows();
    for (std::size_t r = 0; r < ech.rows(); ++r) {
        Wedge3 w;
        for (int c = 0; c < 20; ++c) w[c] = ech(r, c);
        out.basis.push_back(w);
    }
    out.isotropic = true;
    for (std::size_t i = 0; i < out.basis.size() && out.isotropic; ++i)
        for (std::size_t j = i; j < out.basis.size(); ++j)
            if (!symplectic_pairing(out.basis[i], out.basis[j]).is_zero()) {
                out.isotropic = false;
                break;
            }
    return out;
}

}  // namespace epwv::exterior
