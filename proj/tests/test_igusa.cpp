#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <set>
#include <string>
#include <vector>

#include "epwv/igusa/igusa.hpp"

using namespace epwv;
using exact::Gq;
using multipoly::Poly;

TEST_CASE("quartic generators: shape of the presentation") {
    const auto pres = igusa::standard_presentation();

    CHECK(pres.p[0].term_count() == 4);
    CHECK(pres.p[1].term_count() == 2);
    CHECK(pres.p[2].term_count() == 2);
    CHECK(pres.p[3].term_count() == 2);
    CHECK(pres.p[4].term_count() == 1);
    for (const auto& p : pres.p) {
        CHECK(p.arity() == 4);
        CHECK(p.degree() == 4);
    }
    CHECK(pres.p[4] == Poly::monomial(4, {1, 1, 1, 1}, Gq(4)));

    CHECK(pres.ig_p.arity() == 5);
    CHECK(pres.ig_p.degree() == 4);
    CHECK(pres.ig_p.term_count() == 9);

    for (const auto& y : pres.y) {
        CHECK(y.arity() == 5);
        CHECK(y.degree() == 1);
    }
    CHECK(pres.ig_y.arity() == 6);
    CHECK(pres.ig_y.degree() == 4);
}

TEST_CASE("quartic relation: vanishes on the generators") {
    const auto pres = igusa::standard_presentation();
    const auto report = igusa::igusa_relation_check(pres);

    CHECK(report.relation_zero);
    CHECK(report.value_at_unit == Gq(0));
    CHECK(report.perturbation_nonzero);
    CHECK(report.perturbation_terms == 23);
    CHECK(report.pass());

    // The residue of the relation with its cross term removed is exactly
    // twice the product of the generators; pin down its leading term.
    std::array<Poly, 5> P;
    for (int i = 0; i < 5; ++i) P[i] = Poly::variable(5, i);
    const Poly dropped =
        pres.ig_p + (P[0] * P[1] * P[2] * P[3]).scaled(Gq(2));
    const std::vector<Poly> images(pres.p.begin(), pres.p.end());
    const Poly residue = dropped.subst(images);
    REQUIRE(!residue.is_zero());
    const auto& [lm, lc] = residue.leading_term();
    CHECK(lm.exp(0) == 10);
    CHECK(lm.exp(1) == 2);
    CHECK(lm.exp(2) == 2);
    CHECK(lm.exp(3) == 2);
    CHECK(lc == Gq(16));
    CHECK(residue.degree() == 16);
}

TEST_CASE("symmetric coordinates: sum zero and proportional relation") {
    const auto pres = igusa::standard_presentation();
    const auto report = igusa::y_coordinate_check(pres);

    CHECK(report.sum_zero);
    CHECK(report.proportional);
    CHECK(report.scalar == Gq(-324));
    CHECK(report.pass());
}

TEST_CASE("hyperplane sections: every triple pulls back to a square") {
    const auto pres = igusa::standard_presentation();
    const auto report = igusa::hyperplane_square_check(pres);

    REQUIRE(report.pullbacks.size() == 20);
    CHECK(report.all_squares);
    CHECK(report.case_123_exact);
    CHECK(report.distinct_roots == 10);
    CHECK(report.complement_redundancy);
    CHECK(report.pass());

    // Frozen multiset of square scalars over the 20 triples.
    int n_3h = 0, n_6 = 0, n_m6 = 0, n_m3h = 0;
    for (const auto& pb : report.pullbacks) {
        if (pb.scalar == Gq(3, 2)) ++n_3h;
        if (pb.scalar == Gq(6)) ++n_6;
        if (pb.scalar == Gq(-6)) ++n_m6;
        if (pb.scalar == Gq(-3, 2)) ++n_m3h;
    }
    CHECK(n_3h == 4);
    CHECK(n_6 == 6);
    CHECK(n_m6 == 6);
    CHECK(n_m3h == 4);
    CHECK(n_3h + n_6 + n_m6 + n_m3h == 20);

    // Every root is a monic quadratic.
    for (const auto& pb : report.pullbacks) {
        CHECK(pb.root.degree() == 2);
        CHECK(pb.root.leading_term().second == Gq(1));
    }

    // The {1,2,3} triple pulls back to 3/2 times the square of the sum of
    // the coordinate squares, and shares its root with the complement.
    Poly t2(4);
    for (int v = 0; v < 4; ++v)
        t2 += Poly::variable(4, v) * Poly::variable(4, v);
    std::string root_123, root_456;
    for (const auto& pb : report.pullbacks) {
        if (pb.subset == std::array<int, 3>{1, 2, 3}) {
            CHECK(pb.scalar == Gq(3, 2));
            CHECK(pb.root == t2);
            root_123 = pb.root.dump();
        }
        if (pb.subset == std::array<int, 3>{4, 5, 6}) {
            CHECK(pb.scalar == Gq(-3, 2));
            root_456 = pb.root.dump();
        }
    }
    CHECK(!root_123.empty());
    CHECK(root_123 == root_456);
}

TEST_CASE("generator symmetry: Klein double covers and coordinate swaps") {
    const auto pres = igusa::standard_presentation();
    const auto report = igusa::p_invariance_check(pres);

    CHECK(report.klein_even_sign_invariant);
    CHECK(report.s4_action);
    CHECK(report.pass());

    // A single transposition of the middle coordinates genuinely moves the
    // middle generators: swapping t_1 and t_2 exchanges p_1 and p_2.
    const std::vector<Poly> swap12 = {
        Poly::variable(4, 0), Poly::variable(4, 2), Poly::variable(4, 1),
        Poly::variable(4, 3)};
    CHECK(pres.p[1].subst(swap12) == pres.p[2]);
    CHECK(pres.p[2].subst(swap12) == pres.p[1]);
    CHECK(pres.p[3].subst(swap12) == pres.p[3]);
    CHECK(pres.p[0].subst(swap12) == pres.p[0]);
    CHECK(pres.p[4].subst(swap12) == pres.p[4]);

    // An odd sign flip breaks the invariance of the odd generator p_4.
    const std::vector<Poly> flip0 = {
        Poly::variable(4, 0).scaled(Gq(-1)), Poly::variable(4, 1),
        Poly::variable(4, 2), Poly::variable(4, 3)};
    CHECK(pres.p[4].subst(flip0) == pres.p[4].scaled(Gq(-1)));
}
