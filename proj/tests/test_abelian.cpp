#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "epwv/abelian/gaussian_matrix.hpp"
#include "epwv/abelian/generators.hpp"
#include "epwv/abelian/group.hpp"
#include "epwv/abelian/hermitian.hpp"
#include "epwv/abelian/incidence.hpp"
#include "epwv/abelian/quadrics.hpp"
#include "epwv/abelian/surfaces.hpp"
#include "epwv/abelian/torsion.hpp"

using namespace epwv;
using abelian::Gi;
using abelian::GiMat;

TEST_CASE("gaussian integer matrices: parsing, inverses, closure") {
    CHECK(abelian::parse_gaussian_integer("1+i") == Gi{1, 1});
    CHECK(abelian::parse_gaussian_integer("-2i") == Gi{0, -2});
    CHECK(abelian::parse_gaussian_integer("-1-i") == Gi{-1, -1});
    CHECK(abelian::parse_gaussian_integer(" 0 ") == Gi{0, 0});
    CHECK(abelian::parse_gaussian_integer("i") == Gi{0, 1});
    CHECK_THROWS_AS(abelian::parse_gaussian_integer("x"), std::invalid_argument);

    const auto& s = abelian::standard_generators();
    CHECK(abelian::gi_det(s.N5).is_unit());
    CHECK(abelian::gi_inverse(s.N5) * s.N5 == GiMat::identity());
    CHECK(s.N5 * abelian::gi_inverse(s.N5) == GiMat::identity());

    // A unipotent matrix generates an infinite group: the closure cap trips.
    GiMat unipotent = GiMat::identity();
    unipotent.at(0, 1) = Gi{1, 0};
    CHECK_THROWS_AS(abelian::group_closure({unipotent}, 100), std::runtime_error);

    // Non-unit determinants are rejected outright.
    GiMat doubled = GiMat::identity().scaled(Gi{2, 0});
    CHECK_THROWS_AS(abelian::group_closure({doubled}), std::invalid_argument);
    CHECK_THROWS_AS(abelian::gi_inverse(doubled), std::invalid_argument);
}

TEST_CASE("standard generators satisfy the defining relations") {
    const auto& s = abelian::standard_generators();
    const GiMat id = GiMat::identity();

    CHECK(s.T[0] * s.T[0] == id);
    const GiMat t01 = s.T[0] * s.T[1];
    CHECK(t01 * t01 == -id);
    CHECK(s.N45 * s.E5 * s.N45.transpose() == s.E4);

    // The factory validated unitarity; spot-check one generator directly.
    CHECK(s.N45 * s.H * s.N45.conj_transpose() == s.H);
}

TEST_CASE("the generated matrix groups have the expected orders") {
    const auto r = abelian::group_orders();
    CHECK(r.g_order == 32);
    CHECK(r.gi_order == 64);
    CHECK(r.ng_order == 7680);
    CHECK(r.uh_order == 46080);
    CHECK(r.nf_in_uh);
    CHECK(r.e5_invariant_under_g);
    CHECK(r.pass());
}

TEST_CASE("the invariant Hermitian form is unique and preserved by U(H)") {
    const auto r = abelian::invariant_hermitian_space();
    CHECK(r.unknowns == 16);
    CHECK(r.rank == 15);
    CHECK(r.nullity == 1);
    CHECK(r.matches_standard);
    CHECK(r.unitary_checked == 46080);
    CHECK(r.unitary_all);
    CHECK(r.pass());
}

TEST_CASE("the real Gram matrix of H is the E8 lattice") {
    const auto r = abelian::e8_realization();
    CHECK(r.symmetric);
    CHECK(r.diagonal_even);
    for (std::size_t k = 0; k < 8; ++k) CHECK(r.gram(k, k) == 2);
    CHECK(r.determinant == 1);
    const std::vector<long> minors = {2, 4, 8, 16, 8, 4, 2, 1};
    REQUIRE(r.leading_minors.size() == 8);
    for (std::size_t k = 0; k < 8; ++k)
        CHECK(r.leading_minors[k] == minors[k]);
    CHECK(r.positive_definite);
    CHECK(r.norm_two_vectors == 240);
    CHECK(r.pass());
}

TEST_CASE("sixteen two-torsion points are fixed by the whole group") {
    const auto r = abelian::g_fixed_points();
    CHECK(r.points.size() == 16);
    CHECK(r.half_period_form);
    CHECK(r.equals_i_fixed);
    CHECK(r.example_in);
    CHECK(r.example_out);
    CHECK(r.pass());

    // The fixed vectors are exactly the doubled-bit images of the nibbles.
    std::vector<std::uint8_t> expected;
    for (int a = 0; a < 16; ++a)
        expected.push_back(abelian::half_point(static_cast<std::uint8_t>(a)));
    std::sort(expected.begin(), expected.end());
    std::vector<std::uint8_t> got = r.points;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
}

TEST_CASE("two-torsion isotropy census") {
    const auto r = abelian::two_torsion_isotropy();
    CHECK(r.full == 16);
    CHECK(r.order_four == 240);
    CHECK(r.other == 0);
    CHECK(r.pass());
}

TEST_CASE("exactly sixteen semicharacters are invariant") {
    const auto r = abelian::invariant_semicharacters();
    CHECK(r.survivors.size() == 16);
    CHECK(r.paired_pattern);
    CHECK(r.all_ones_survives);
    CHECK(r.trivial_on_fixed);
    CHECK(r.basis_pairing_even);
    CHECK(r.cocycle_consistent);
    CHECK(r.pass());

    const long expected_e[8][8] = {
        {0, -2, 0, 0, 0, -1, 1, -1}, {2, 0, 0, 0, 1, 0, 1, 1},
        {0, 0, 0, -2, 1, -1, -1, 0}, {0, 0, 2, 0, 1, 1, 0, -1},
        {0, -1, -1, -1, 0, -2, 0, 0}, {1, 0, 1, -1, 2, 0, 0, 0},
        {-1, -1, 1, 0, 0, 0, 0, -2}, {1, -1, 0, 1, 0, 0, 2, 0}};
    for (std::size_t u = 0; u < 8; ++u)
        for (std::size_t v = 0; v < 8; ++v)
            CHECK(r.e_form(u, v) == expected_e[u][v]);
}

TEST_CASE("the symplectic orbit realizes the symmetric group S6") {
    const auto r = abelian::sigma6_quotient();
    CHECK(r.orbit_size == 6);
    CHECK(r.image_order == 720);
    CHECK(r.kernel_order == 64);
    CHECK(r.kernel_is_gi);
    CHECK(r.e4_sign_pattern);
    CHECK(r.pass());
}

TEST_CASE("tangent-cone quadrics form a single ten-element orbit") {
    const auto r = abelian::quadratic_form_orbits();
    CHECK(r.epsilon == std::array<int, 5>{1, 1, 1, -1, -1});
    CHECK(r.distinct_forms == 10);
    CHECK(r.gluing);
    CHECK(r.single_uh_orbit);
    CHECK(r.stabilizer_order == 4608);
    CHECK(r.stabilizer_matches);
    CHECK(r.pass());
}

TEST_CASE("the stabilizer orbits on the fixed points have sizes 1, 6, 9") {
    const auto r = abelian::odp_orbit_analysis();
    CHECK(r.stabilizer_order == 4608);
    CHECK(r.orbit_sizes == std::vector<std::size_t>{1, 6, 9});
    CHECK(r.six_matches_listed);
    CHECK(r.origin_alone);
    CHECK(r.pass());

    // The listed six points are indeed an orbit element by element.
    const auto six = abelian::off_divisor_points();
    std::vector<std::uint8_t> listed(six.begin(), six.end());
    std::sort(listed.begin(), listed.end());
    CHECK(r.six_orbit == listed);
}

TEST_CASE("the divisor-point incidence is a (16,10) configuration") {
    const auto r = abelian::divisor_point_incidence();
    CHECK(r.row_sums_ten);
    CHECK(r.col_sums_ten);
    CHECK(r.pair_common_six);
    CHECK(r.pair_outside_two);
    CHECK(r.translation_equivariant);
    CHECK(r.span_diagonal_off);
    CHECK(r.span_triangle_on);
    CHECK(r.span_first_row);
    CHECK(r.pass());

    // Direct count: the principal divisor and its translate by p1 share 6
    // of the 16 distinguished points.
    const auto& table = r.incidence.table;
    int common = 0;
    for (int x = 0; x < 16; ++x)
        if (table[0][x] && table[0b0001][x]) ++common;
    CHECK(common == 6);

    // The first probe point p4 misses the principal divisor but lies on the
    // translate by p3.
    CHECK_FALSE(table[0][0b1000]);
    CHECK(table[0b0100][0b1000]);
}

TEST_CASE("thirty symplectic reflections") {
    const auto r = abelian::symplectic_reflections();
    CHECK(r.reflections.size() == 30);
    CHECK(r.matches_expected);
    CHECK(r.in_g == 10);
    CHECK(r.in_g_are_involutions);
    CHECK(r.rank_t0_is_two);
    CHECK(r.minus_identity_excluded);
    CHECK(r.pass());
}

TEST_CASE("the 120 fixed surfaces pair into 60 and meet the divisors in 30s") {
    const auto r = abelian::fixed_surface_census();
    CHECK(r.surfaces.size() == 120);
    CHECK(r.divisor_products_four);
    CHECK(r.sixteen_points_each);
    CHECK(r.four_components_each);
    CHECK(r.four_points_per_component);
    CHECK(r.point_sets_paired);
    CHECK(r.pairs_are_opposite);
    CHECK(r.tangents_separate_pairs);
    CHECK(r.t0_kernels_differ);
    CHECK(r.t0_kernel_unique);
    CHECK(r.opposite_conjugate_in_g);
    CHECK(r.per_divisor_thirty);
    CHECK(r.per_divisor_fifteen_pairs);
    CHECK(r.four_divisors_per_surface);
    CHECK(r.pass());
}

TEST_CASE("holomorphic Lefschetz balance of multiplication by i") {
    const auto r = abelian::lefschetz_balance();
    CHECK(r.denominator == Gi{-4, 0});
    CHECK(r.h_plus == 6);
    CHECK(r.h_minus == 10);
    CHECK(r.pass());
}
