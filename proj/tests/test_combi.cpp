#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "epwv/combinatorics/configurations.hpp"
#include "epwv/combinatorics/hyperplanes.hpp"
#include "epwv/combinatorics/petersen.hpp"
#include "epwv/combinatorics/plane_family.hpp"
#include "epwv/combinatorics/recover.hpp"
#include "epwv/multipoly/symmetric.hpp"

using namespace epwv;
using exact::Gq;

TEST_CASE("invariant hyperplane sets: orbit classification") {
    const auto rep = combinatorics::classify_invariant_hyperplane_sets();
    CHECK(rep.orbit_lengths == std::vector<std::size_t>{1, 6, 10, 15});
    CHECK(rep.sixteen_sums ==
          std::vector<std::vector<std::size_t>>{{1, 15}, {6, 10}});
    for (auto l : rep.orbit_lengths) {
        CHECK(l != 2);
        CHECK(l != 14);
    }
    CHECK(rep.pass());
}

TEST_CASE("sixteen hyperplanes: forms of both families") {
    const auto h1 = combinatorics::family_hyperplanes(1, Gq(-1, 2));
    const auto h2 = combinatorics::family_hyperplanes(2, Gq(-1, 2));
    REQUIRE(h1.size() == 16);
    REQUIRE(h2.size() == 16);
    CHECK(h1[0].name == "H");
    CHECK(h1[0].coeffs == std::vector<Gq>(6, Gq(1)));
    // H01 at t=-1/2: 1/2 on slots 0,1 and -1/2 elsewhere
    CHECK(h1[1].name == "H01");
    CHECK(h1[1].coeffs[0] == Gq(1, 2));
    CHECK(h1[1].coeffs[5] == Gq(-1, 2));
    // family 2 leads with the ten triple forms containing 0
    CHECK(h2[0].name == "H012");
    CHECK(h2[9].name == "H045");
    CHECK(h2[10].name == "H0");
    CHECK_THROWS_AS(combinatorics::family_hyperplanes(3, Gq(0)),
                    std::invalid_argument);
}

TEST_CASE("sixty planes per family at the special parameter") {
    const auto r1 = combinatorics::plane_family_report(1, Gq(-1, 2));
    CHECK(r1.plane_count == 60);
    CHECK(r1.type_counts ==
          std::map<std::string, std::size_t>{{"1a", 45}, {"1b", 15}});
    CHECK(r1.all_in_exactly_four);
    CHECK(r1.pass());

    const auto r2 = combinatorics::plane_family_report(2, Gq(-1, 2));
    CHECK(r2.plane_count == 60);
    CHECK(r2.type_counts ==
          std::map<std::string, std::size_t>{{"2a", 15}, {"2b", 45}});
    CHECK(r2.pass());

    // a generic parameter keeps the clean structure
    CHECK(combinatorics::plane_family_report(1, Gq(1)).pass());
    CHECK(combinatorics::plane_family_report(2, Gq(1)).pass());
}

TEST_CASE("plane construction degenerates at the excluded parameters") {
    // family 1 at t=-1/3: the 45 non-special planes fall into 5 hyperplanes
    const auto r1 = combinatorics::plane_family_report(1, Gq(-1, 3));
    CHECK(r1.plane_count == 60);
    CHECK(!r1.all_in_exactly_four);
    CHECK(r1.degenerate_sizes.size() == 45);
    CHECK(std::all_of(r1.degenerate_sizes.begin(), r1.degenerate_sizes.end(),
                      [](std::size_t s) { return s == 5; }));
    CHECK(r1.type_counts ==
          std::map<std::string, std::size_t>{{"1a", 45}, {"1b", 15}});
    CHECK(!r1.pass());

    // family 2 at t=-1/6: twenty extra planes appear
    const auto r2 = combinatorics::plane_family_report(2, Gq(-1, 6));
    CHECK(r2.plane_count == 80);
    CHECK(r2.all_in_exactly_four);
    CHECK(r2.type_counts ==
          std::map<std::string, std::size_t>{{"2a", 15}, {"2b", 65}});
    CHECK(!r2.pass());
}

TEST_CASE("planes at t=-1/2 reproduce the labeled catalog") {
    const auto m1 = combinatorics::label_catalog_match(1);
    CHECK(m1.planes_match_catalog);  // even-sign planes
    CHECK(m1.special_type_matches);  // type 1b = all-plus labels
    CHECK(m1.pass());

    const auto m2 = combinatorics::label_catalog_match(2);
    CHECK(m2.planes_match_catalog);  // odd-sign planes
    CHECK(m2.special_type_matches);  // type 2a = all-minus labels
    CHECK(m2.pass());
}

TEST_CASE("kernel recovery of the sextic at t=-1/2") {
    const auto rec2 = combinatorics::recover_sextic(2, Gq(-1, 2));
    REQUIRE(rec2.kernel_dimension == 1);
    const std::vector<Gq> f6_coeffs = {Gq(1), Gq(0), Gq(-1), Gq(0),
                                       Gq(0), Gq(0), Gq(0),  Gq(2),
                                       Gq(0), Gq(0), Gq(-16)};
    CHECK(rec2.generator == f6_coeffs);
    CHECK(rec2.generator_poly == multipoly::f6());

    const auto rec1 = combinatorics::recover_sextic(1, Gq(-1, 2));
    REQUIRE(rec1.kernel_dimension == 1);
    std::vector<Gq> dual_coeffs = f6_coeffs;
    dual_coeffs[10] = Gq(16);
    CHECK(rec1.generator == dual_coeffs);
    CHECK(rec1.generator_poly == multipoly::f6_dual());

    CHECK(combinatorics::recover_sextic(1, Gq(1)).kernel_dimension == 1);
    CHECK(combinatorics::recover_sextic(2, Gq(1)).kernel_dimension == 1);
}

TEST_CASE("reduction maps send every parameter to t' = -1") {
    for (int family : {1, 2})
        for (const Gq& t : {Gq(1), Gq(-1, 2), Gq(0)}) {
            const auto rep = combinatorics::reduction_map_check(family, t);
            CHECK(!rep.singular);
            CHECK(rep.image_parameter == Gq(-1));
            CHECK(rep.image_is_family);
            CHECK(rep.pass());
        }
    CHECK(combinatorics::reduction_map_check(1, Gq(5)).image_parameter ==
          Gq(-1));
    CHECK(combinatorics::reduction_map_check(2, Gq(-1, 3)).image_parameter ==
          Gq(-1));

    // the excluded parameters give a singular map
    const auto s1 = combinatorics::reduction_map_check(1, Gq(-1, 3));
    CHECK(s1.singular);
    CHECK(s1.determinant == Gq(0));
    CHECK(!s1.pass());
    const auto s2 = combinatorics::reduction_map_check(2, Gq(-1, 6));
    CHECK(s2.singular);
    CHECK(!s2.pass());
    // det = (6a+b) b^5 with b = 6t+2 resp. 6t+1
    const auto d = combinatorics::reduction_map_check(1, Gq(1));
    CHECK(d.determinant == Gq(-4) * Gq(8) * Gq(8) * Gq(8) * Gq(8) * Gq(8));
}

TEST_CASE("degenerate sextics: perfect square and common point") {
    const auto rep = combinatorics::degenerate_sextics();
    CHECK(rep.square_kernel_dimension == 1);
    CHECK(rep.generator_is_square);
    CHECK(rep.root_degree == 3);
    CHECK(rep.degenerate_plane_count == 80);
    CHECK(rep.common_point_dimension == 1);
    CHECK(rep.common_point == std::vector<Gq>(6, Gq(1)));
    CHECK(rep.control_not_square);
    CHECK(rep.control_common_dimension == 0);
    CHECK(rep.pass());
}

TEST_CASE("intersection rules over all 1770 pairs") {
    const auto rep = combinatorics::intersection_rule_check();
    CHECK(rep.pair_count == 1770);
    CHECK(rep.exceptions == 0);
    CHECK(rep.dimension_census ==
          std::map<int, std::size_t>{{-1, 360}, {0, 1050}, {1, 360}});
    CHECK(rep.partitions_per_type ==
          std::map<std::string, std::size_t>{{"1a", 15}, {"1b", 15}});
    CHECK(rep.partitions_match_labels);
    CHECK(rep.pass());
}

TEST_CASE("six complete incident configurations per family") {
    for (int family : {2, 1}) {
        const auto rep = combinatorics::complete_incident_sets(family);
        INFO("family " << family);
        REQUIRE(rep.configurations.size() == 6);
        CHECK(rep.all_pairwise_incident);
        CHECK(rep.none_extendable);
        CHECK(rep.matching_config_present);
        CHECK(rep.matching_equals_incident20);
        CHECK(rep.orbit_transitive);
        CHECK(rep.stabilizer_order == 120);
        CHECK(rep.stabilizer_kernel == 1);
        CHECK(rep.induced_permutations == 120);
        CHECK(rep.pass());
        for (const auto& cfg : rep.configurations) {
            CHECK(cfg.planes.size() == 20);
            CHECK(cfg.labels.size() == 20);
        }
    }
}

TEST_CASE("intersection points of the twenty incident planes") {
    const auto rep = combinatorics::twenty_plane_points();
    CHECK(rep.all_pairs_meet_in_point);
    CHECK(rep.census ==
          std::map<std::size_t, std::size_t>{{2, 30}, {5, 16}});
    CHECK(rep.quintuple_equals_even_sign);
    CHECK(rep.one_plane_per_partition);
    CHECK(rep.pairwise_same_partition);
    CHECK(rep.four_points_per_plane);
    CHECK(rep.example_point_found);
    CHECK(rep.pass());
}

TEST_CASE("petersen labeling: unique extension of the four seeds") {
    const auto rep = combinatorics::petersen_labeling();
    CHECK(rep.solutions == 1);
    CHECK(rep.labeling.vertices.size() == 10);
    CHECK(rep.labeling.edges.size() == 15);
    CHECK(rep.vertex_partitions_distinct);
    CHECK(rep.remaining_are_matching);
    CHECK(rep.matches_reference);
    CHECK(rep.edge_labels_distinct);
    CHECK(rep.matching_labels_disjoint_edges);
    CHECK(rep.homomorphism_order == 120);
    CHECK(rep.homomorphism_consistent);
    CHECK(rep.transposition_partitions);
    CHECK(rep.pass());

    // spot value: the first vertex carries the first seed partition
    REQUIRE(!rep.labeling.vertex_partition.empty());
    CHECK(rep.labeling.vertices[0] == std::array<int, 2>{0, 1});
    CHECK(rep.labeling.vertex_partition[0] ==
          combinatorics::detail::make_partition(0, 3, 1, 4, 2, 5));
}
