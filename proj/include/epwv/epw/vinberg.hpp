#pragma once
// The Vinberg double-cover model: six plane cubics through four base points,
// the quadrics cutting the image cone in P^6, the change of basis to the
// polarized coordinates, the fully symbolic image identity F6(Q) = 0, the
// image of vertex pairs, and the S5-equivariance of the model.
//
// The square root y6 (with y6^2 = q0'(y)) never appears alone: all identity
// checks live in the rank-2 free module R + R*w over the polynomial ring R
// in (x0,x1,x2,u0,u1,u2), where w stands for y6(x)*z6(u) and w^2 reduces to
// q0'(y(x)) * q0'(z(u)).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "epwv/exact/matrix.hpp"
#include "epwv/exact/perm.hpp"
#include "epwv/multipoly/symmetric.hpp"

namespace epwv::epw {

using exact::Gq;
using exact::Matrix;
using exact::Perm;
using multipoly::Mono;
using multipoly::Poly;

// ---------------------------------------------------------------------------
// model data
// ---------------------------------------------------------------------------

// The six cubics in (x0,x1,x2), each vanishing at the four base points
// (1:0:0), (0:1:0), (0:0:1), (1:1:1):
//   y0 = x0^2 x1 - x0x1x2     y1 = x0^2 x2 - x0x1x2
//   y2 = x0 x1^2 - x0x1x2     y3 = x0 x2^2 - x0x1x2
//   y4 = x1^2 x2 - x0x1x2     y5 = x1 x2^2 - x0x1x2
inline const std::vector<Poly>& vinberg_cubics() {
    static const std::vector<Poly> cubics = [] {
        Poly xyz = Poly::monomial(3, {1, 1, 1});
        auto cubic = [&](int a, int b, int c) {
            return Poly::monomial(3, {a, b, c}) - xyz;
        };
        return std::vector<Poly>{cubic(2, 1, 0), cubic(2, 0, 1),
                                 cubic(1, 2, 0), cubic(1, 0, 2),
                                 cubic(0, 2, 1), cubic(0, 1, 2)};
    }();
    return cubics;
}

// q'_0..q'_5 as quadrics in y0..y5 (index j holds q'_j).
inline const std::array<Poly, 6>& primed_quadrics() {
    static const std::array<Poly, 6> q = [] {
        auto quad = [](std::initializer_list<std::pair<int, std::pair<int, int>>>
                           terms) {
            Poly p(6);
            for (auto [c, ab] : terms) {
                Mono m = Mono{}.with_exp(ab.first,
                                         ab.first == ab.second ? 2 : 1);
                if (ab.first != ab.second) m = m.with_exp(ab.second, 1);
                p.add_term(m, Gq(c));
            }
            return p;
        };
        using P = std::pair<int, std::pair<int, int>>;
        std::array<Poly, 6> out;
        out[0] = quad({P{1, {1, 2}}, P{-1, {3, 4}}});
        out[1] = quad({P{1, {0, 3}}, P{1, {1, 2}}, P{-1, {2, 5}},
                       P{-1, {3, 4}}});
        out[2] = quad({P{1, {0, 4}}, P{1, {1, 2}}, P{-1, {1, 5}},
                       P{-1, {3, 4}}});
        out[3] = quad({P{1, {0, 5}}, P{1, {1, 2}}, P{-1, {1, 5}},
                       P{-1, {2, 5}}, P{-1, {3, 4}}});
        out[4] = quad({P{1, {1, 4}}, P{-1, {1, 5}}, P{-1, {3, 4}}});
        out[5] = quad({P{1, {2, 3}}, P{-1, {2, 5}}, P{-1, {3, 4}}});
        return out;
    }();
    return q;
}

// Change of basis from (q'_1..q'_5, q'_6) to the polarized coordinates
// q_1..q_6, where q'_6 = q'_0 - y6^2.
inline const std::array<std::array<int, 6>, 6>& change_of_basis() {
    static const std::array<std::array<int, 6>, 6> cb = {
        std::array<int, 6>{1, 1, 0, 0, -2, -1},
        std::array<int, 6>{-1, 1, 0, 0, 2, -1},
        std::array<int, 6>{1, -1, 0, 2, 0, -1},
        std::array<int, 6>{-1, -1, 2, 0, 0, -1},
        std::array<int, 6>{1, 1, -2, 0, 0, -1},
        std::array<int, 6>{1, 1, 0, -2, 0, -1}};
    return cb;
}

// q_i split as a_i(y0..y5) + lambda_i * y6^2.
struct ConeQuadric {
    Poly a;     // arity 6, quadric in y0..y5
    Gq lambda;  // coefficient of y6^2
};

inline const std::array<ConeQuadric, 6>& cone_quadrics() {
    static const std::array<ConeQuadric, 6> q = [] {
        const auto& qp = primed_quadrics();
        const auto& cb = change_of_basis();
        std::array<ConeQuadric, 6> out;
        for (int i = 0; i < 6; ++i) {
            Poly a(6);
            for (int j = 0; j < 5; ++j) a += qp[j + 1].scaled(Gq(cb[i][j]));
            a += qp[0].scaled(Gq(cb[i][5]));
            out[i] = ConeQuadric{a, Gq(-cb[i][5])};
        }
        return out;
    }();
    return q;
}

// ---------------------------------------------------------------------------
// quadratic extension module over the (x,u) ring
// ---------------------------------------------------------------------------

// Element a + b*w of the rank-2 module with w^2 = *ksq (a fixed polynomial).
struct QuadExt {
    Poly a, b;
    const Poly* ksq = nullptr;

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return {x.a + y.a, x.b + y.b, x.ksq ? x.ksq : y.ksq};
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        const Poly* k = x.ksq ? x.ksq : y.ksq;
        return {x.a * y.a + (x.b * y.b) * (*k), x.a * y.b + x.b * y.a, k};
    }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

inline QuadExt scalar_mul(const Gq& c, const QuadExt& x) {
    return {x.a.scaled(c), x.b.scaled(c), x.ksq};
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

// q'_0(y(x)) as a sextic in x (arity 3).
inline Poly branch_sextic() {
    return primed_quadrics()[0].subst(vinberg_cubics());
}

namespace detail {

// cubics viewed inside the 6-variable (x0,x1,x2,u0,u1,u2) ring, either in
// the x block (offset 0) or the u block (offset 3)
inline std::vector<Poly> cubics_in_block(int offset) {
    std::vector<Poly> out;
    for (const auto& c : vinberg_cubics()) {
        Poly p(6);
        for (const auto& [m, co] : c.terms()) {
            Mono m6;
            for (int v = 0; v < 3; ++v) m6 = m6.with_exp(offset + v, m.exp(v));
            p.add_term(m6, co);
        }
        out.push_back(std::move(p));
    }
    return out;
}

// Polarization A(y,z) of a quadric in y0..y5, evaluated at y = cubics(x),
// z = cubics(u): the coefficient of y_a z_b is assembled per term.
inline Poly polarized_on_cubics(const Poly& q, const std::vector<Poly>& yx,
                                const std::vector<Poly>& zu) {
    Poly acc(6);
    for (const auto& [m, c] : q.terms()) {
        std::array<int, 2> idx{};
        int t = 0;
        for (int v = 0; v < 6; ++v)
            for (int k = 0; k < m.exp(v); ++k) idx[t++] = v;
        if (idx[0] == idx[1]) {
            acc += (yx[idx[0]] * zu[idx[0]]).scaled(c);
        } else {
            Gq half = c * Gq(1, 2);
            acc += (yx[idx[0]] * zu[idx[1]]).scaled(half);
            acc += (yx[idx[1]] * zu[idx[0]]).scaled(half);
        }
    }
    return acc;
}

}  // namespace detail

struct ImageIdentityReport {
    bool sextic_nonzero = false;
    bool residue_zero = false;
    std::size_t residue_plain_terms = 0;  // terms in the w-free part
    std::size_t residue_w_terms = 0;      // terms in the w coefficient
    std::string residue_leading;          // empty when the residue vanishes

    bool pass() const { return sextic_nonzero && residue_zero; }
};

// Fully symbolic check that the sextic vanishes on the image of the pairing
// map: F(..., Q_i(y(x), z(u)), ...) == 0 in the rank-2 module, where
// Q_i(y,z) is the polarized bilinear form of q_i and w = y6 z6 satisfies
// w^2 = q'_0(y(x)) * q'_0(z(u)).
inline ImageIdentityReport verify_image_identity(const Poly& sextic) {
    ImageIdentityReport rep;
    rep.sextic_nonzero = !sextic.is_zero();
    if (!rep.sextic_nonzero) {
        rep.residue_zero = true;  // vacuous; guarded by sextic_nonzero
        return rep;
    }
    static const Poly ksq = [] {
        auto yx = detail::cubics_in_block(0);
        auto zu = detail::cubics_in_block(3);
        Poly r3x = primed_quadrics()[0].subst(yx);
        Poly r3u = primed_quadrics()[0].subst(zu);
        return r3x * r3u;
    }();
    auto yx = detail::cubics_in_block(0);
    auto zu = detail::cubics_in_block(3);
    std::vector<QuadExt> images;
    for (const auto& cq : cone_quadrics()) {
        QuadExt e;
        e.a = detail::polarized_on_cubics(cq.a, yx, zu);
        e.b = Poly::constant(6, cq.lambda);
        e.ksq = &ksq;
        images.push_back(std::move(e));
    }
    QuadExt one{Poly::constant(6, Gq(1)), Poly(6), &ksq};
    QuadExt res = multipoly::compose<QuadExt>(sextic, images, one);
    rep.residue_zero = res.is_zero();
    rep.residue_plain_terms = res.a.term_count();
    rep.residue_w_terms = res.b.term_count();
    if (!rep.residue_zero) {
        const Poly& lead_part = res.a.is_zero() ? res.b : res.a;
        const auto& [m, c] = lead_part.leading_term();
        rep.residue_leading = c.str();
        for (int v = 0; v < 6; ++v)
            rep.residue_leading += " " + std::to_string(m.exp(v));
        if (res.a.is_zero()) rep.residue_leading += " (w part)";
    }
    return rep;
}

struct VertexPairImage {
    bool all_equal = false;       // the six coordinates agree
    bool nonzero = false;         // common value is not identically zero
    bool is_minus_2_branch = false;  // common value == -2 * q'_0(y(x))
    std::vector<Gq> projective_point;  // (1:...:1) when all_equal && nonzero

    bool pass() const { return all_equal && nonzero && is_minus_2_branch; }
};

// A line through the cone vertex meets the double cover in a pair of points
// (y, y6), (y, -y6); the polarized coordinates of such a pair are
// a_i(y(x)) - lambda_i * q'_0(y(x)), which all collapse to the same sextic.
inline VertexPairImage image_of_vertex_pairs() {
    VertexPairImage out;
    Poly r3 = branch_sextic();
    std::vector<Poly> vals;
    for (const auto& cq : cone_quadrics())
        vals.push_back(cq.a.subst(vinberg_cubics()) - r3.scaled(cq.lambda));
    out.all_equal = true;
    for (const auto& v : vals)
        if (!(v == vals[0])) out.all_equal = false;
    out.nonzero = !vals[0].is_zero();
    out.is_minus_2_branch = (vals[0] == r3.scaled(Gq(-2)));
    if (out.all_equal && out.nonzero)
        out.projective_point = std::vector<Gq>(6, Gq(1));
    return out;
}

// ---------------------------------------------------------------------------
// S5 equivariance
// ---------------------------------------------------------------------------

// All ten cubic monomials in three variables span the ambient of the cubic
// system; expresses `target` in the basis of the six model cubics (throws
// when it is outside their span).
inline std::array<Gq, 6> in_cubic_basis(const Poly& target) {
    static const std::vector<Mono> monos = [] {
        std::vector<Mono> out;
        for (int a = 3; a >= 0; --a)
            for (int b = 3 - a; b >= 0; --b)
                out.push_back(Mono::from_exponents({a, b, 3 - a - b}));
        return out;
    }();
    Matrix<Gq> aug(monos.size(), 7);
    const auto& cubics = vinberg_cubics();
    for (std::size_t r = 0; r < monos.size(); ++r) {
        for (int j = 0; j < 6; ++j) {
            auto it = cubics[j].terms().find(monos[r]);
            aug(r, j) = (it == cubics[j].terms().end()) ? Gq(0) : it->second;
        }
        auto it = target.terms().find(monos[r]);
        aug(r, 6) = (it == target.terms().end()) ? Gq(0) : it->second;
    }
    auto [rank, pivots] = exact::rref_in_place(aug);
    std::array<Gq, 6> sol{};
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] == 6)
            throw std::invalid_argument("in_cubic_basis: not in span");
        sol[pivots[k]] = aug(k, 6);
    }
    return sol;
}

// The projective point maps inducing the S5 generators on the model, as
// substitutions x_i -> images[i] (arity 3). The last generator is the
// Cremona involution, handled separately (monomial exponent flip).
enum class S5Generator { g12, g23, g34, g45 };

inline Poly cubic_through_point_map(const Poly& cubic, S5Generator g) {
    auto lin = [](std::vector<std::vector<int>> rows) {
        std::vector<Poly> imgs;
        for (const auto& r : rows) {
            Poly p(3);
            for (int j = 0; j < 3; ++j)
                if (r[j]) p += Poly::variable(3, j).scaled(Gq(r[j]));
            imgs.push_back(std::move(p));
        }
        return imgs;
    };
    switch (g) {
        case S5Generator::g12:
            return cubic.subst(lin({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
        case S5Generator::g23:
            return cubic.subst(lin({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
        case S5Generator::g34:
            return cubic.subst(
                lin({{1, 0, -1}, {0, 1, -1}, {0, 0, -1}}));
        case S5Generator::g45: {
            // Cremona (1/x0 : 1/x1 : 1/x2), cleared by (x0x1x2)^2:
            // exponents flip e -> 2 - e componentwise
            Poly out(3);
            for (const auto& [m, c] : cubic.terms())
                out.add_term(Mono::from_exponents({2 - m.exp(0), 2 - m.exp(1),
                                                   2 - m.exp(2)}),
                             c);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

// The matrix of the induced linear action on y0..y5 (row i = coefficients
// of y_i's image in the cubic basis), derived from the point map.
inline Matrix<Gq> derived_alpha(S5Generator g) {
    Matrix<Gq> m(6, 6);
    const auto& cubics = vinberg_cubics();
    for (int i = 0; i < 6; ++i) {
        auto row = in_cubic_basis(cubic_through_point_map(cubics[i], g));
        for (int j = 0; j < 6; ++j) m(i, j) = row[j];
    }
    return m;
}

// The permutations of the polarized coordinates induced by the generators,
// in the order (12),(23),(34),(45).
inline const std::vector<Perm<6>>& beta_images() {
    static const std::vector<Perm<6>> betas = [] {
        auto p3 = [](int a0, int b0, int a1, int b1, int a2, int b2) {
            Perm<6> g;
            std::swap(g.map[a0], g.map[b0]);
            std::swap(g.map[a1], g.map[b1]);
            std::swap(g.map[a2], g.map[b2]);
            return g;
        };
        return std::vector<Perm<6>>{
            p3(0, 3, 1, 4, 2, 5), p3(0, 1, 2, 4, 3, 5),
            p3(0, 5, 1, 4, 2, 3), p3(0, 1, 2, 5, 3, 4)};
    }();
    return betas;
}

struct GeneratorEquivariance {
    std::string name;
    bool exact = false;        // q_i(alpha y) == s_i q_{beta(i)} exactly
    Gq lift_scalar;            // c with y6 -> c*y6 (c^2 rational)
    std::vector<Gq> scalars;   // the six s_i
};

struct Sigma5Report {
    std::vector<GeneratorEquivariance> generators;

    bool pass() const {
        if (generators.size() != 4) return false;
        for (const auto& g : generators)
            if (!g.exact) return false;
        return true;
    }
};

// For each S5 generator, derives the linear action alpha on y0..y5 from the
// point map, lifts it by y6 -> c*y6 with c in {1,-1,i,-i}, and verifies
// q_i(alpha y) = s_i * q_{beta(i)} as an exact polynomial identity.
inline Sigma5Report sigma5_equivariance() {
    Sigma5Report rep;
    const auto& names =
        std::vector<std::string>{"(12)", "(23)", "(34)", "(45)"};
    const auto& gens = std::vector<S5Generator>{
        S5Generator::g12, S5Generator::g23, S5Generator::g34,
        S5Generator::g45};
    const auto& betas = beta_images();
    const auto& q = cone_quadrics();
    for (int gi = 0; gi < 4; ++gi) {
        Matrix<Gq> alpha = derived_alpha(gens[gi]);
        std::vector<Poly> a_images;
        for (int j = 0; j < 6; ++j) {
            Poly img(6);
            for (int k = 0; k < 6; ++k)
                img += Poly::variable(6, k).scaled(alpha(j, k));
            a_images.push_back(std::move(img));
        }
        GeneratorEquivariance ge;
        ge.name = names[gi];
        // try c^2 = 1 then c^2 = -1 (c = i)
        for (Gq c2 : {Gq(1), Gq(-1)}) {
            bool all_ok = true;
            std::vector<Gq> scalars;
            for (int i = 0; i < 6; ++i) {
                Poly lhs_a = q[i].a.subst(a_images);
                Gq lhs_lam = q[i].lambda * c2;
                const auto& tgt = q[betas[gi](i)];
                // find s with (lhs_a, lhs_lam) == s * (tgt.a, tgt.lambda)
                Gq s;
                if (!tgt.lambda.is_zero()) {
                    s = lhs_lam / tgt.lambda;
                } else if (!tgt.a.is_zero()) {
                    const auto& [m, c] = tgt.a.leading_term();
                    auto it = lhs_a.terms().find(m);
                    s = (it == lhs_a.terms().end()) ? Gq(0) : it->second / c;
                }
                if (lhs_a == tgt.a.scaled(s) && lhs_lam == tgt.lambda * s) {
                    scalars.push_back(s);
                } else {
                    all_ok = false;
                    break;
                }
            }
            if (all_ok) {
                ge.exact = true;
                ge.lift_scalar = (c2 == Gq(1)) ? Gq(1) : Gq::i();
                ge.scalars = std::move(scalars);
                break;
            }
        }
        rep.generators.push_back(std::move(ge));
    }
    return rep;
}

}  // namespace epwv::epw
