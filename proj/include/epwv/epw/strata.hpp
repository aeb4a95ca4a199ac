#pragma once
// Pointwise stratification of the EPW sextic: the sixteen deepest points and
// their five planes each, the thirty pairwise intersection points, the
// sixteen tangent hyperplanes with their squared-cubic restrictions, the
// projective-duality division, and the Beauville-form numerology.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epwv/epw/degeneracy.hpp"
#include "epwv/exterior/planes_catalog.hpp"
#include "epwv/multipoly/symmetric.hpp"

namespace epwv::epw {

using exterior::LabeledPlane;
using exterior::Plane;

// ---------------------------------------------------------------------------
// the sixteen deepest points
// ---------------------------------------------------------------------------

// Sign vectors (±1, ..., ±1) with an even number of minus signs, first
// coordinate +1 (projective normalization); deterministic order by the bit
// pattern of the minus positions among coordinates 1..5.
inline std::vector<std::vector<Gq>> even_sign_points() {
    std::vector<std::vector<Gq>> pts;
    for (int mask = 0; mask < 32; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2) continue;
        std::vector<Gq> p{Gq(1)};
        for (int b = 0; b < 5; ++b)
            p.push_back((mask >> b) & 1 ? Gq(-1) : Gq(1));
        pts.push_back(std::move(p));
    }
    return pts;
}

inline bool point_on_plane(const Plane& pl, const std::vector<Gq>& p) {
    Matrix<Gq> stack(4, 6);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c) stack(r, c) = pl.basis()(r, c);
    for (std::size_t c = 0; c < 6; ++c) stack(3, c) = p[c];
    return exact::matrix_rank(stack) == 3;
}

// Membership of a grade-3 vector in F_v = ker(v wedge -): the wedge with
// sum v_i e_i must vanish in grade 4.
inline bool in_f_v(const std::vector<Gq>& v, const exterior::Wedge3& w) {
    std::array<Gq, 15> acc{};
    for (int i = 0; i < 6; ++i) {
        if (v[i].is_zero()) continue;
        auto part = exterior::wedge_e(i, w);
        for (int r = 0; r < 15; ++r) acc[r] += v[i] * part[r];
    }
    for (const auto& x : acc)
        if (!x.is_zero()) return false;
    return true;
}

struct Ya4Report {
    std::size_t point_count = 0;           // 16
    bool all_corank_4 = false;             // each point has corank exactly 4
    bool five_planes_each = false;         // 5 of the 20 planes per point
    bool planes_span_intersection = false; // pluckers lie in F_v, rank 4
    bool one_plane_per_partition = false;  // the 5 planes use all 5 partitions
    std::vector<std::string> example_labels;  // planes through (1:-1:1:1:-1:1)
    std::size_t pairwise_point_count = 0;  // 30 two-plane points
    bool pairwise_corank_2 = false;        // corank exactly 2 at each
    std::map<std::size_t, std::size_t> census;  // planes-through-point -> count

    bool pass() const {
        return point_count == 16 && all_corank_4 && five_planes_each &&
               planes_span_intersection && one_plane_per_partition &&
               pairwise_point_count == 30 && pairwise_corank_2;
    }
};

namespace detail {

// scale so the first nonzero coordinate is 1 (projective representative)
inline std::vector<Gq> normalize_point(std::vector<Gq> v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            Gq inv = Gq(1) / x;
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

struct GqVectorLess {
    bool operator()(const std::vector<Gq>& a,
                    const std::vector<Gq>& b) const {
        for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
            if (a[k] == b[k]) continue;
            return a[k] < b[k];
        }
        return a.size() < b.size();
    }
};

}  // namespace detail

inline Ya4Report ya4_analysis() {
    Ya4Report rep;
    auto points = even_sign_points();
    rep.point_count = points.size();
    auto planes = exterior::incident_planes_20();

    rep.all_corank_4 = true;
    rep.five_planes_each = true;
    rep.planes_span_intersection = true;
    rep.one_plane_per_partition = true;
    for (const auto& p : points) {
        if (corank_at(p) != 4) rep.all_corank_4 = false;
        std::vector<const LabeledPlane*> through;
        for (const auto& lp : planes)
            if (point_on_plane(lp.plane, p)) through.push_back(&lp);
        if (through.size() != 5) rep.five_planes_each = false;
        std::set<exterior::PairTriple> parts;
        Matrix<Gq> pluckers(through.size(), 20);
        for (std::size_t k = 0; k < through.size(); ++k) {
            parts.insert(through[k]->pairs);
            auto w = through[k]->plane.plucker();
            if (!in_f_v(p, w)) rep.planes_span_intersection = false;
            for (int c = 0; c < 20; ++c) pluckers(k, c) = w[c];
        }
        if (parts.size() != 5) rep.one_plane_per_partition = false;
        if (exact::matrix_rank(pluckers) != 4)
            rep.planes_span_intersection = false;
    }

    std::vector<Gq> named{Gq(1), Gq(-1), Gq(1), Gq(1), Gq(-1), Gq(1)};
    for (const auto& lp : planes)
        if (point_on_plane(lp.plane, named))
            rep.example_labels.push_back(lp.label());
    std::sort(rep.example_labels.begin(), rep.example_labels.end());

    // every pair of the 20 planes meets in one point; those not among the
    // sixteen deep points form the pairwise stratum
    std::set<std::vector<Gq>, detail::GqVectorLess> deep, pairwise;
    for (const auto& p : points) deep.insert(detail::normalize_point(p));
    rep.pairwise_corank_2 = true;
    for (std::size_t a = 0; a < planes.size(); ++a)
        for (std::size_t b = a + 1; b < planes.size(); ++b) {
            auto basis =
                plane_intersection_basis(planes[a].plane, planes[b].plane);
            if (basis.size() != 1) continue;
            auto pt = detail::normalize_point(basis[0]);
            if (deep.count(pt)) continue;
            if (pairwise.insert(pt).second && corank_at(pt) != 2)
                rep.pairwise_corank_2 = false;
        }
    rep.pairwise_point_count = pairwise.size();

    // census over all intersection points: planes through each
    for (const auto& collection : {deep, pairwise})
        for (const auto& pt : collection) {
            std::size_t n = 0;
            for (const auto& lp : planes)
                if (point_on_plane(lp.plane, pt)) ++n;
            ++rep.census[n];
        }
    return rep;
}

// ---------------------------------------------------------------------------
// tangent hyperplanes
// ---------------------------------------------------------------------------

struct TangentHyperplane {
    std::string name;
    std::vector<Gq> coeffs;  // hyperplane sum coeffs[i] x_i = 0
};

// The sixteen tangent hyperplanes: six with coefficient vector e_i - 1/2*1
// and ten with chi_{0jk} - 1/2*1 (triples through index 0).
inline std::vector<TangentHyperplane> tangent_hyperplanes() {
    std::vector<TangentHyperplane> out;
    for (int i = 0; i < 6; ++i) {
        std::vector<Gq> v(6, Gq(-1, 2));
        v[i] += Gq(1);
        out.push_back({"H" + std::to_string(i), std::move(v)});
    }
    for (int j = 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
            std::vector<Gq> v(6, Gq(-1, 2));
            v[0] += Gq(1);
            v[j] += Gq(1);
            v[k] += Gq(1);
            out.push_back({"H0" + std::to_string(j) + std::to_string(k),
                           std::move(v)});
        }
    return out;
}

// Restrict an arity-6 polynomial to the hyperplane by eliminating the first
// variable with nonzero coefficient; the result has arity 5 (the remaining
// variables in order).
inline Poly restrict_to_hyperplane(const Poly& f, const std::vector<Gq>& v) {
    int piv = -1;
    for (int i = 0; i < 6 && piv < 0; ++i)
        if (!v[i].is_zero()) piv = i;
    if (piv < 0) throw std::invalid_argument("zero hyperplane");
    std::vector<Poly> images;
    int var = 0;
    std::vector<int> remap(6, -1);
    for (int i = 0; i < 6; ++i)
        if (i != piv) remap[i] = var++;
    for (int i = 0; i < 6; ++i) {
        if (i != piv) {
            images.push_back(Poly::variable(5, remap[i]));
            continue;
        }
        Poly sub(5);
        for (int k = 0; k < 6; ++k)
            if (k != piv)
                sub += Poly::variable(5, remap[k]).scaled(-v[k] / v[piv]);
        images.push_back(std::move(sub));
    }
    return f.subst(images);
}

struct HyperplaneRestriction {
    std::string name;
    bool is_squared_cubic = false;
    Gq scale;                       // restriction == scale * cubic^2
    Poly cubic;                     // arity 5, degree 3, monic leading term
    std::size_t points_on = 0;      // of the 16 deep points, on the hyperplane
    std::size_t points_singular = 0;  // of those, singular points of the cubic
    std::size_t planes_inside = 0;  // of the 60 planes, inside the hyperplane
};

struct TangentHyperplaneReport {
    std::vector<HyperplaneRestriction> restrictions;

    bool pass() const {
        if (restrictions.size() != 16) return false;
        for (const auto& r : restrictions)
            if (!r.is_squared_cubic || r.points_on != 10 ||
                r.points_singular != 10 || r.planes_inside != 15)
                return false;
        return true;
    }
};

inline TangentHyperplaneReport tangent_hyperplane_analysis(const Poly& sextic) {
    TangentHyperplaneReport rep;
    auto points = even_sign_points();
    auto planes = exterior::singular_planes_60();
    for (const auto& h : tangent_hyperplanes()) {
        HyperplaneRestriction r;
        r.name = h.name;
        Poly restricted = restrict_to_hyperplane(sextic, h.coeffs);
        if (auto sq = multipoly::perfect_square_root(restricted);
            sq && sq->root.degree() == 3) {
            r.is_squared_cubic = true;
            r.scale = sq->scale;
            r.cubic = sq->root;
        }
        // the eliminated variable is always x0 here (coefficient ±1/2)
        for (const auto& p : points) {
            Gq dot(0);
            for (int i = 0; i < 6; ++i) dot += h.coeffs[i] * p[i];
            if (!dot.is_zero()) continue;
            ++r.points_on;
            if (!r.is_squared_cubic) continue;
            std::vector<Gq> patch(p.begin() + 1, p.end());
            bool singular = r.cubic.eval(patch).is_zero();
            for (int var = 0; var < 5 && singular; ++var)
                singular = r.cubic.diff(var).eval(patch).is_zero();
            if (singular) ++r.points_singular;
        }
        for (const auto& lp : planes) {
            bool inside = true;
            for (std::size_t row = 0; row < 3 && inside; ++row) {
                Gq dot(0);
                for (int i = 0; i < 6; ++i)
                    dot += h.coeffs[i] * lp.plane.basis()(row, i);
                inside = dot.is_zero();
            }
            if (inside) ++r.planes_inside;
        }
        rep.restrictions.push_back(std::move(r));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// projective duality
// ---------------------------------------------------------------------------

struct DualityReport {
    std::size_t composition_terms = 0;  // of the degree-30 composition
    bool remainder_zero = false;
    Poly quotient;                      // degree 24 when division is exact
    bool samples_agree = false;         // power-sum assembly vs direct values
    bool dual_statement = false;        // sign-flipped identity for the dual

    bool pass() const {
        return remainder_zero && quotient.degree() == 24 && samples_agree &&
               dual_statement;
    }
};

namespace detail {

// negate variable 0: exact automorphism exchanging the sextic and its dual
inline Poly flip_first_variable(const Poly& p) {
    Poly out(p.arity());
    for (const auto& [m, c] : p.terms())
        out.add_term(m, m.exp(0) % 2 ? -c : c);
    return out;
}

}  // namespace detail

// Composes the dual sextic with the gradient of the sextic and divides the
// degree-30 result by the sextic. The composition is assembled through
// power sums of the squared gradient components: for six arguments
//   m_6 = p_6,   m_42 = p_2 p_4 - p_6,   m_222 = (p_2^3 - 3 p_2 p_4 + 2 p_6)/6
// with p_2k = sum_i g_i^{2k}, and m_111111 = prod_i g_i, so
//   dual(g) = (8 p_6 - 6 p_2 p_4 + p_2^3)/3 + 16 prod.
inline DualityReport projective_duality_check() {
    DualityReport rep;
    const Poly f = multipoly::f6();
    std::vector<Poly> grad;
    for (int i = 0; i < 6; ++i) grad.push_back(f.diff(i));

    Poly p2(6), p4(6), p6(6);
    for (const auto& g : grad) {
        Poly g2 = g * g;
        Poly g4 = g2 * g2;
        p2 += g2;
        p4 += g4;
        p6 += g2 * g4;
    }
    Poly prod = Poly::constant(6, Gq(1));
    for (const auto& g : grad) prod = prod * g;
    Poly comp = p6.scaled(Gq(8, 3)) - (p2 * p4).scaled(Gq(2)) +
                (p2 * p2 * p2).scaled(Gq(1, 3)) + prod.scaled(Gq(16));
    rep.composition_terms = comp.term_count();

    auto dr = multipoly::divide_by_monic_in_variable(comp, f, 0);
    rep.remainder_zero = dr.remainder.is_zero();
    rep.quotient = std::move(dr.quotient);

    // cross-check the power-sum assembly against direct evaluation of the
    // dual sextic at the gradient values
    const Poly fdual = multipoly::f6_dual();
    rep.samples_agree = true;
    for (const auto& pt : std::vector<std::vector<long>>{
             {1, 2, 3, 4, 5, 7}, {1, 1, 1, 1, 1, 1}, {2, -1, 0, 3, 1, 5}}) {
        std::vector<Gq> v;
        for (long x : pt) v.push_back(Gq(x));
        std::vector<Gq> gv;
        for (const auto& g : grad) gv.push_back(g.eval(v));
        if (!(comp.eval(v) == fdual.eval(gv))) rep.samples_agree = false;
    }

    // the dual identity follows by negating x0: flip(comp) = fdual * flip(Q)
    rep.dual_statement =
        rep.remainder_zero &&
        detail::flip_first_variable(comp) ==
            fdual * detail::flip_first_variable(rep.quotient);
    return rep;
}

// ---------------------------------------------------------------------------
// Beauville-form numerology
// ---------------------------------------------------------------------------

struct BeauvilleClasses {
    long q_mu_c = 10;   // square of the pushed-forward conic class
    long q_two_eta = 8;  // square of twice the half-diagonal class
};

struct HkNumerology {
    long q_h = 0;
    long chi_h = 0;
    bool canonical = false;  // the (2, 6) values of the double EPW polarization
};

// q(H) = q(mu(C)) - q(2 eta); Euler characteristic via the K3^[2]-type
// Riemann-Roch value binom(q/2 + 3, 2).
inline HkNumerology hk_numerology(const BeauvilleClasses& c) {
    HkNumerology out;
    out.q_h = c.q_mu_c - c.q_two_eta;
    long half = out.q_h / 2;
    out.chi_h = (half + 3) * (half + 2) / 2;
    out.canonical = (out.q_h == 2 && out.chi_h == 6);
    return out;
}

}  // namespace epwv::epw
