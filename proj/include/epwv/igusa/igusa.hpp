#pragma once
// Invariant-ring presentation of the tangent cone at the distinguished point
// of the quotient fourfold: the five quartic generators p_0..p_4 in the
// coordinates t_0..t_3, the Igusa-quartic relation Ig_P between them, the six
// symmetric y-coordinates, and the tangent-hyperplane pullbacks that become
// perfect squares of quadrics.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "epwv/exact/gaussian.hpp"
#include "epwv/multipoly/polynomial.hpp"

namespace epwv::igusa {

using exact::Gq;
using multipoly::Poly;

struct InvariantRingPresentation {
    std::array<Poly, 5> p;   // arity 4, the generators in t_0..t_3
    Poly ig_p;               // arity 5, the relation in P_0..P_4
    std::array<Poly, 6> y;   // arity 5, linear forms in P_0..P_4
    Poly ig_y;               // arity 6, (y_1^2+...+y_6^2)^2 - 4(y_1^4+...+y_6^4)
};

inline InvariantRingPresentation standard_presentation() {
    InvariantRingPresentation pres;

    auto t4 = [](int a, int b, int c, int d) {
        return Poly::monomial(4, {a, b, c, d});
    };
    pres.p[0] = t4(4, 0, 0, 0) + t4(0, 4, 0, 0) + t4(0, 0, 4, 0) + t4(0, 0, 0, 4);
    pres.p[1] = (t4(2, 2, 0, 0) + t4(0, 0, 2, 2)).scaled(Gq(2));
    pres.p[2] = (t4(2, 0, 2, 0) + t4(0, 2, 0, 2)).scaled(Gq(2));
    pres.p[3] = (t4(2, 0, 0, 2) + t4(0, 2, 2, 0)).scaled(Gq(2));
    pres.p[4] = t4(1, 1, 1, 1).scaled(Gq(4));

    std::array<Poly, 5> P;
    for (int i = 0; i < 5; ++i) P[i] = Poly::variable(5, i);
    pres.ig_p = P[1] * P[1] * P[2] * P[2] + P[1] * P[1] * P[3] * P[3] +
                P[2] * P[2] * P[3] * P[3] +
                (P[0] * P[0] - P[1] * P[1] - P[2] * P[2] - P[3] * P[3] +
                 P[4] * P[4]) *
                    P[4] * P[4] -
                (P[0] * P[1] * P[2] * P[3]).scaled(Gq(2));

    const Gq h(1, 2);
    pres.y[0] = P[0] + P[4].scaled(Gq(3));
    pres.y[1] = P[0] - P[4].scaled(Gq(3));
    pres.y[2] = (P[1] + P[2] + P[3]).scaled(Gq(3) * h) - P[0].scaled(h);
    pres.y[3] = (P[1] - P[2] - P[3]).scaled(Gq(3) * h) - P[0].scaled(h);
    pres.y[4] = (P[2] - P[1] - P[3]).scaled(Gq(3) * h) - P[0].scaled(h);
    pres.y[5] = (P[3] - P[1] - P[2]).scaled(Gq(3) * h) - P[0].scaled(h);

    Poly s2(6), s4(6);
    for (int i = 0; i < 6; ++i) {
        const Poly yi = Poly::variable(6, i);
        s2 += yi * yi;
        s4 += yi * yi * yi * yi;
    }
    pres.ig_y = s2 * s2 - s4.scaled(Gq(4));
    return pres;
}

struct IgusaRelationReport {
    bool relation_zero = false;          // Ig_P(p_0(t), ..., p_4(t)) == 0
    bool perturbation_nonzero = false;   // dropping -2 P0 P1 P2 P3 fails
    std::size_t perturbation_terms = 0;  // 23 residue terms
    Gq value_at_unit;                    // Ig_P(1,0,0,0,0) == 0

    bool pass() const {
        return relation_zero && perturbation_nonzero && value_at_unit == Gq(0);
    }
};

inline IgusaRelationReport igusa_relation_check(
    const InvariantRingPresentation& pres = standard_presentation()) {
    IgusaRelationReport report;
    const std::vector<Poly> images(pres.p.begin(), pres.p.end());
    report.relation_zero = pres.ig_p.subst(images).is_zero();

    std::array<Poly, 5> P;
    for (int i = 0; i < 5; ++i) P[i] = Poly::variable(5, i);
    const Poly dropped =
        pres.ig_p + (P[0] * P[1] * P[2] * P[3]).scaled(Gq(2));
    const Poly residue = dropped.subst(images);
    report.perturbation_nonzero = !residue.is_zero();
    report.perturbation_terms = residue.term_count();

    report.value_at_unit =
        pres.ig_p.eval({Gq(1), Gq(0), Gq(0), Gq(0), Gq(0)});
    return report;
}

struct YCoordinateReport {
    bool sum_zero = false;       // y_1 + ... + y_6 == 0 as a linear form
    bool proportional = false;   // Ig_y(y(P)) == scalar * Ig_P
    Gq scalar;                   // -324

    bool pass() const { return sum_zero && proportional && scalar != Gq(0); }
};

inline YCoordinateReport y_coordinate_check(
    const InvariantRingPresentation& pres = standard_presentation()) {
    YCoordinateReport report;
    Poly sum(5);
    for (const auto& yi : pres.y) sum += yi;
    report.sum_zero = sum.is_zero();

    const std::vector<Poly> images(pres.y.begin(), pres.y.end());
    const Poly composed = pres.ig_y.subst(images);
    if (!composed.is_zero() && !pres.ig_p.is_zero()) {
        const auto& [lm, lc] = pres.ig_p.leading_term();
        Gq candidate(0);
        for (const auto& [m, c] : composed.terms())
            if (m == lm) candidate = c / lc;
        report.scalar = candidate;
        report.proportional = (composed - pres.ig_p.scaled(candidate)).is_zero();
    }
    return report;
}

struct HyperplanePullback {
    std::array<int, 3> subset{};  // 1-based indices a < b < c
    Gq scalar;                    // pullback == scalar * root^2
    Poly root;                    // monic quadratic in t_0..t_3
};

struct HyperplaneSquareReport {
    std::vector<HyperplanePullback> pullbacks;  // all 20 triples
    bool all_squares = false;
    bool case_123_exact = false;       // (P0+P1+P2+P3)(p) == (t0^2+...+t3^2)^2
    std::size_t distinct_roots = 0;    // 10
    bool complement_redundancy = false;  // {a,b,c} and complement share a root

    bool pass() const {
        return pullbacks.size() == 20 && all_squares && case_123_exact &&
               distinct_roots == 10 && complement_redundancy;
    }
};

inline HyperplaneSquareReport hyperplane_square_check(
    const InvariantRingPresentation& pres = standard_presentation()) {
    HyperplaneSquareReport report;
    const std::vector<Poly> images(pres.p.begin(), pres.p.end());

    report.all_squares = true;
    std::map<std::string, std::vector<std::array<int, 3>>> by_root;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                const Poly form = pres.y[a - 1] + pres.y[b - 1] + pres.y[c - 1];
                const Poly quartic = form.subst(images);
                const auto sq = multipoly::perfect_square_root(quartic);
                if (!sq) {
                    report.all_squares = false;
                    continue;
                }
                HyperplanePullback pb;
                pb.subset = {a, b, c};
                pb.scalar = sq->scale;
                pb.root = sq->root;
                by_root[sq->root.dump()].push_back(pb.subset);
                report.pullbacks.push_back(std::move(pb));
            }
    report.distinct_roots = by_root.size();
    report.complement_redundancy = true;
    for (const auto& [key, subsets] : by_root) {
        if (subsets.size() != 2) {
            report.complement_redundancy = false;
            continue;
        }
        std::array<bool, 7> used{};
        for (const auto& s : subsets)
            for (const int i : s) used[i] = true;
        for (int i = 1; i <= 6; ++i)
            if (!used[i]) report.complement_redundancy = false;
    }

    std::array<Poly, 5> P;
    for (int i = 0; i < 5; ++i) P[i] = Poly::variable(5, i);
    const Poly q123 = (P[0] + P[1] + P[2] + P[3]).subst(images);
    Poly t2(4);
    for (int v = 0; v < 4; ++v)
        t2 += Poly::variable(4, v) * Poly::variable(4, v);
    report.case_123_exact = (q123 == t2 * t2);
    return report;
}

struct InvarianceReport {
    bool klein_even_sign_invariant = false;  // each p_i fixed by the Klein
                                             // permutations and even sign flips
    bool s4_action = false;  // every t-permutation fixes p_0, p_4 and
                             // permutes the set {p_1, p_2, p_3}

    bool pass() const { return klein_even_sign_invariant && s4_action; }
};

inline InvarianceReport p_invariance_check(
    const InvariantRingPresentation& pres = standard_presentation()) {
    InvarianceReport report;
    const std::array<std::array<int, 4>, 4> klein = {
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};

    report.klein_even_sign_invariant = true;
    for (const auto& perm : klein)
        for (int mask = 0; mask < 16; ++mask) {
            int minus = 0;
            for (int j = 0; j < 4; ++j)
                if (mask & (1 << j)) ++minus;
            if (minus % 2 != 0) continue;
            std::vector<Poly> im(4);
            for (int j = 0; j < 4; ++j) {
                im[j] = Poly::variable(4, perm[j]);
                if (mask & (1 << j)) im[j] = im[j].scaled(Gq(-1));
            }
            for (const auto& p : pres.p)
                if (p.subst(im) != p) report.klein_even_sign_invariant = false;
        }

    report.s4_action = true;
    std::array<int, 4> perm = {0, 1, 2, 3};
    do {
        std::vector<Poly> im(4);
        for (int j = 0; j < 4; ++j) im[j] = Poly::variable(4, perm[j]);
        if (pres.p[0].subst(im) != pres.p[0]) report.s4_action = false;
        if (pres.p[4].subst(im) != pres.p[4]) report.s4_action = false;
        std::array<Poly, 3> mid;
        for (int k = 0; k < 3; ++k) mid[k] = pres.p[k + 1].subst(im);
        for (int k = 0; k < 3; ++k) {
            const bool hit = (mid[k] == pres.p[1]) || (mid[k] == pres.p[2]) ||
                             (mid[k] == pres.p[3]);
            if (!hit) report.s4_action = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return report;
}

}  // namespace epwv::igusa
