// Tests for the EPW machinery: singular planes, degeneracy coranks, the
// minor-determinant division, the Vinberg model (image identity, vertex
// pairs, S5 equivariance), the deepest stratum, tangent hyperplanes,
// projective duality, and the Beauville numerology.
#include <catch2/catch_amalgamated.hpp>

#include "epwv/epw/degeneracy.hpp"
#include "epwv/epw/sextic.hpp"
#include "epwv/epw/strata.hpp"
#include "epwv/epw/vinberg.hpp"

using epwv::exact::Gq;
using epwv::exact::Matrix;
using epwv::multipoly::Poly;
namespace ex = epwv::exterior;
namespace ep = epwv::epw;

namespace {

std::vector<Gq> gq_point(std::vector<long> v) {
    std::vector<Gq> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("sixty planes lie in the singular locus with expected orbits") {
    ep::CanonicalSextic s;
    auto rep = ep::singular_planes_check(s);
    CHECK(rep.all_contained);
    CHECK(rep.control_plane_rejected);
    CHECK(rep.s6_orbit_sizes == std::vector<std::size_t>{15, 45});
    CHECK(rep.beta_orbit_sizes == std::vector<std::size_t>{5, 10, 15, 30});
    CHECK(rep.pass());

    // single-plane orbits under the twisted S5
    auto orbit_size = [](const std::string& label) {
        auto lp = ex::plane_from_string(label);
        return ep::plane_orbit_sizes({lp.plane}, ex::beta_generators());
    };
    CHECK(orbit_size("0-1,2-3,4-5") == std::vector<std::size_t>{5});
    CHECK(orbit_size("0+1,2+3,4-5") == std::vector<std::size_t>{15});
}

TEST_CASE("degeneracy matrices give the expected coranks") {
    const auto& ms = ep::degeneracy_matrices();
    for (const auto& m : ms) {
        REQUIRE(m.rows() == 15);
        REQUIRE(m.cols() == 10);
        for (const auto& e : m.entries())
            CHECK((e == Gq(0) || e == Gq(1) || e == Gq(-1)));
    }

    CHECK(ep::corank_at(gq_point({1, 1, 1, 1, 1, 1})) == 4);
    CHECK(ep::corank_at(gq_point({1, -1, 1, 1, -1, 1})) == 4);

    // a point with F6 != 0 is off the sextic: corank 0
    auto off = gq_point({1, 2, 3, 4, 5, 7});
    CHECK(epwv::multipoly::f6().eval(off) == Gq(26912));
    CHECK(ep::corank_at(off) == 0);

    // generic point of a plane outside the incident family: corank 2
    auto lp = ex::plane_from_string("0-1,2-4,3-5");
    std::vector<Gq> pt(6, Gq(0));
    const long weights[3] = {2, 3, 5};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c)
            pt[c] += Gq(weights[r]) * lp.plane.basis()(r, c);
    CHECK(ep::corank_at(pt) == 2);

    CHECK_THROWS_AS(ep::corank_at(std::vector<Gq>(6, Gq(0))),
                    std::invalid_argument);
}

TEST_CASE("minor determinant is the sextic times a quartic monomial") {
    CHECK(ep::rows_containing(0) ==
          std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

    auto r0 = ep::epw_equation_from_minor(0);
    CHECK(r0.remainder_zero);
    CHECK(r0.quotient == Poly::monomial(6, {4, 0, 0, 0, 0, 0}, Gq(-1)));
    CHECK(r0.pass());
    CHECK(r0.determinant.term_count() == 57);
    CHECK(r0.determinant.degree() == 10);
    CHECK(r0.determinant.eval(gq_point({1, 1, 1, 1, 1, 1})) == Gq(0));
    CHECK(r0.determinant == epwv::multipoly::f6() * r0.quotient);

    auto r5 = ep::epw_equation_from_minor(5);
    CHECK(r5.remainder_zero);
    CHECK(r5.quotient == Poly::monomial(6, {0, 0, 0, 0, 0, 4}, Gq(-1)));
    CHECK(r5.pass());
}

TEST_CASE("perturbed ten-spaces break the minor division") {
    auto fam = ex::canonical_lagrangian_basis();  // copy
    REQUIRE(fam.size() == 10);

    auto pure = [](int a, int b, int c) {
        ex::Wedge3 w{};
        w[ex::index3(a, b, c)] = Gq(1);
        return w;
    };
    auto is_isotropic = [](const std::vector<ex::Wedge3>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i; j < v.size(); ++j)
                if (!ex::symplectic_pairing(v[i], v[j]).is_zero())
                    return false;
        return true;
    };
    auto rows0 = ep::rows_containing(0);

    SECTION("another Lagrangian: division by this sextic still fails") {
        fam[9] = pure(0, 1, 2);
        CHECK(ex::wedge_row_space(fam).rows() == 10);
        CHECK(is_isotropic(fam));
        auto det = ep::minor_determinant_for(ep::degeneracy_matrices_for(fam),
                                             rows0);
        CHECK(det.term_count() == 32);
        CHECK(det.degree() == 10);
        auto dr = epwv::multipoly::divide_by_monic_in_variable(
            det, epwv::multipoly::f6(), 0);
        CHECK(dr.remainder.term_count() == 189);
    }

    SECTION("a non-Lagrangian ten-space fails as well") {
        fam[9] = pure(0, 1, 3);
        CHECK(ex::wedge_row_space(fam).rows() == 10);
        CHECK_FALSE(is_isotropic(fam));
        auto det = ep::minor_determinant_for(ep::degeneracy_matrices_for(fam),
                                             rows0);
        CHECK(det.term_count() == 15);
        CHECK(det.degree() == 10);
        auto dr = epwv::multipoly::divide_by_monic_in_variable(
            det, epwv::multipoly::f6(), 0);
        CHECK(dr.remainder.term_count() == 98);
    }
}

TEST_CASE("model cubics vanish at the base points; five quadrics pull back "
          "to zero") {
    const auto& cubics = ep::vinberg_cubics();
    REQUIRE(cubics.size() == 6);
    for (const auto& c : cubics) {
        CHECK(c.degree() == 3);
        CHECK(c.term_count() == 2);
        for (auto base : {std::vector<long>{1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                          {1, 1, 1}})
            CHECK(c.eval(gq_point(base)) == Gq(0));
    }

    const auto& qp = ep::primed_quadrics();
    for (int j = 1; j <= 5; ++j) CHECK(qp[j].subst(cubics).is_zero());

    Poly r3 = ep::branch_sextic();
    CHECK_FALSE(r3.is_zero());
    CHECK(r3.degree() == 6);
    CHECK(r3 == qp[0].subst(cubics));

    // every polarized coordinate carries coefficient -(-1) = 1 on y6^2
    for (const auto& cq : ep::cone_quadrics()) CHECK(cq.lambda == Gq(1));
}

TEST_CASE("the sextic vanishes identically on the model image") {
    auto rep = ep::verify_image_identity(epwv::multipoly::f6());
    CHECK(rep.sextic_nonzero);
    CHECK(rep.residue_zero);
    CHECK(rep.pass());

    // perturbing one coefficient of the sextic breaks the identity
    Poly wrong = epwv::multipoly::f6() +
                 epwv::multipoly::monomial_symmetric(6, {1, 1, 1, 1, 1, 1});
    auto bad = ep::verify_image_identity(wrong);
    CHECK_FALSE(bad.residue_zero);
    CHECK(bad.residue_plain_terms == 8257);
    CHECK(bad.residue_w_terms == 4104);
    CHECK_FALSE(bad.residue_leading.empty());
}

TEST_CASE("vertex pairs map to the all-ones point on the sextic") {
    auto img = ep::image_of_vertex_pairs();
    CHECK(img.all_equal);
    CHECK(img.nonzero);
    CHECK(img.is_minus_2_branch);
    CHECK(img.projective_point == std::vector<Gq>(6, Gq(1)));
    CHECK(img.pass());
    CHECK(epwv::multipoly::f6().eval(img.projective_point) == Gq(0));
}

TEST_CASE("S5 equivariance of the model quadrics") {
    auto rep = ep::sigma5_equivariance();
    REQUIRE(rep.generators.size() == 4);
    CHECK(rep.pass());
    for (const auto& g : rep.generators) {
        CHECK(g.exact);
        CHECK(g.lift_scalar == Gq::i());  // c^2 = -1 throughout
        REQUIRE(g.scalars.size() == 6);
        for (const auto& s : g.scalars) CHECK(s == Gq(-1));
    }

    // derived linear actions: (23) induces the coordinate swap (01)(23)(45)
    auto a23 = ep::derived_alpha(ep::S5Generator::g23);
    const int p23[6] = {1, 0, 3, 2, 5, 4};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(a23(i, j) == (j == p23[i] ? Gq(1) : Gq(0)));

    // (12) induces the coordinate swap (02)(14)(35)
    auto a12 = ep::derived_alpha(ep::S5Generator::g12);
    const int p12[6] = {2, 4, 0, 5, 1, 3};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(a12(i, j) == (j == p12[i] ? Gq(1) : Gq(0)));

    // the genuinely linear generator: first row of the derived matrix
    auto a34 = ep::derived_alpha(ep::S5Generator::g34);
    const long row0[6] = {1, -1, 0, 1, 0, 0};
    for (int j = 0; j < 6; ++j) CHECK(a34(0, j) == Gq(row0[j]));

    // the Cremona generator acts by the coordinate reversal
    auto a45 = ep::derived_alpha(ep::S5Generator::g45);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            CHECK(a45(i, j) == (j == 5 - i ? Gq(1) : Gq(0)));
}

TEST_CASE("the deepest stratum: sixteen points, five planes each") {
    auto rep = ep::ya4_analysis();
    CHECK(rep.point_count == 16);
    CHECK(rep.all_corank_4);
    CHECK(rep.five_planes_each);
    CHECK(rep.planes_span_intersection);
    CHECK(rep.one_plane_per_partition);
    CHECK(rep.pairwise_point_count == 30);
    CHECK(rep.pairwise_corank_2);
    CHECK(rep.pass());

    CHECK(rep.example_labels ==
          std::vector<std::string>{"0+1,2-3,4+5", "0+4,1+3,2-5",
                                   "0-2,1-4,3-5", "0-3,1+5,2+4",
                                   "0-5,1+2,3+4"});

    std::map<std::size_t, std::size_t> expected{{2, 30}, {5, 16}};
    CHECK(rep.census == expected);
}

TEST_CASE("sixteen tangent hyperplanes cut out doubled cubics") {
    auto hs = ep::tangent_hyperplanes();
    REQUIRE(hs.size() == 16);
    CHECK(hs[0].name == "H0");
    CHECK(hs[6].name == "H012");
    CHECK(hs[15].name == "H045");

    auto rep = ep::tangent_hyperplane_analysis(epwv::multipoly::f6());
    REQUIRE(rep.restrictions.size() == 16);
    for (const auto& r : rep.restrictions) {
        INFO(r.name);
        CHECK(r.is_squared_cubic);
        CHECK_FALSE(r.scale.is_zero());
        CHECK(r.cubic.degree() == 3);
        CHECK(r.points_on == 10);
        CHECK(r.points_singular == 10);
        CHECK(r.planes_inside == 15);
    }
    CHECK(rep.pass());
}

TEST_CASE("projective duality: the composed dual sextic divides exactly") {
    auto rep = ep::projective_duality_check();
    CHECK(rep.remainder_zero);
    CHECK(rep.composition_terms == 21692);
    CHECK(rep.quotient.degree() == 24);
    CHECK(rep.quotient.term_count() == 8190);
    CHECK(rep.samples_agree);
    CHECK(rep.dual_statement);
    CHECK(rep.pass());

    const auto& [lm, lc] = rep.quotient.leading_term();
    CHECK(lc == Gq(46656));
    CHECK(lm.exp(0) == 24);
    CHECK(lm.degree() == 24);

    CHECK(rep.quotient.eval(gq_point({1, 2, 3, 4, 5, 7})) ==
          Gq(mpz_class("89025875182287256027136")));
}

TEST_CASE("Beauville-form numerology") {
    auto canonical = ep::hk_numerology(ep::BeauvilleClasses{});
    CHECK(canonical.q_h == 2);
    CHECK(canonical.chi_h == 6);
    CHECK(canonical.canonical);

    auto variant = ep::hk_numerology(ep::BeauvilleClasses{8, 8});
    CHECK(variant.q_h == 0);
    CHECK(variant.chi_h == 3);
    CHECK_FALSE(variant.canonical);
}
