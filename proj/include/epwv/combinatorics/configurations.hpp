#pragma once
// Pairwise intersection combinatorics of the 60 planes at t = -1/2 and the
// complete incident 20-plane configurations.
//
// Each plane determines a perfect matching ("partition") of {0..5}: the three
// coordinate transpositions that permute its containing hyperplanes.  Two
// planes meet in a point exactly when their partitions are disjoint (no
// common pair), or additionally when they come from the same partition and at
// least one has the non-special type.  A complete incident set is built in
// two phases: choose 5 pairwise-disjoint partitions (a one-factorization of
// the pair graph, 6 ways), then take the 4 planes of each; the resulting
// 20 planes are pairwise incident and admit no 21st plane.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epwv/combinatorics/plane_family.hpp"
#include "epwv/exact/perm.hpp"

namespace epwv::combinatorics {

using exact::Perm;
using exterior::PairTriple;

namespace detail {

inline std::vector<Gq> normalize_form(std::vector<Gq> v) {
    for (const auto& x : v)
        if (!x.is_zero()) {
            const Gq inv = Gq(1) / x;
            for (auto& y : v) y *= inv;
            break;
        }
    return v;
}

inline PairTriple canonical_partition(std::vector<std::pair<int, int>> pairs) {
    for (auto& [i, j] : pairs)
        if (i > j) std::swap(i, j);
    std::sort(pairs.begin(), pairs.end());
    if (pairs.size() != 3)
        throw std::logic_error("canonical_partition: need exactly 3 pairs");
    return PairTriple{pairs[0], pairs[1], pairs[2]};
}

}  // namespace detail

// The partition attached to a plane: the pairs (a,b) whose coordinate swap
// stabilizes the set of forms of the containing hyperplanes.  Requires the
// result to be a perfect matching of {0..5}.
inline PairTriple plane_partition(const PlaneFamilyInstance& inst,
                                  const FamilyPlane& fp) {
    std::set<std::vector<Gq>> forms;
    for (int i : fp.containing)
        forms.insert(detail::normalize_form(inst.hyperplanes[i].coeffs));

    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            std::set<std::vector<Gq>> swapped;
            for (auto form : forms) {
                std::swap(form[a], form[b]);
                swapped.insert(detail::normalize_form(std::move(form)));
            }
            if (swapped == forms) pairs.emplace_back(a, b);
        }
    if (pairs.size() != 3)
        throw std::logic_error("plane_partition: swap set is not a matching");
    int mask = 0;
    for (const auto& [i, j] : pairs) mask |= (1 << i) | (1 << j);
    if (mask != 0x3f)
        throw std::logic_error("plane_partition: pairs do not cover {0..5}");
    return detail::canonical_partition(std::move(pairs));
}

inline bool partitions_disjoint(const PairTriple& p, const PairTriple& q) {
    for (const auto& a : p)
        for (const auto& b : q)
            if (a == b) return false;
    return true;
}

struct IntersectionRuleReport {
    std::size_t pair_count = 0;                   // 1770
    std::size_t exceptions = 0;                   // 0
    std::map<int, std::size_t> dimension_census;  // {-1:360, 0:1050, 1:360}
    std::map<std::string, std::size_t> partitions_per_type;  // {1a:15, 1b:15}
    bool partitions_match_labels = false;  // extraction agrees with V-labels

    bool pass() const {
        return pair_count == 1770 && exceptions == 0 &&
               partitions_match_labels;
    }
};

// Verify, over all 1770 pairs of the family-1 planes at t = -1/2, that the
// partition rule predicts "meet in a point" exactly: disjoint partitions
// when both planes are type (1b); same-or-disjoint otherwise.
inline IntersectionRuleReport intersection_rule_check() {
    IntersectionRuleReport rep;
    const auto inst = build_family_planes(1, Gq(-1, 2));

    struct Info {
        const FamilyPlane* fp;
        PairTriple part;
    };
    std::vector<Info> info;
    std::map<std::string, std::set<PairTriple>> parts_by_type;
    for (const auto& fp : inst.planes) {
        info.push_back({&fp, plane_partition(inst, fp)});
        parts_by_type[fp.type].insert(info.back().part);
    }
    for (const auto& [ty, parts] : parts_by_type)
        rep.partitions_per_type[ty] = parts.size();

    // extraction agrees with the catalog labels of both families
    rep.partitions_match_labels = true;
    for (int family : {1, 2}) {
        const auto fam = family == 1 ? inst : build_family_planes(2, Gq(-1, 2));
        std::map<exterior::Plane, PairTriple> by_label;
        const auto& signs_all =
            family == 1 ? even_sign_classes() : exterior::odd_sign_classes();
        for (const auto& part : exterior::partitions6())
            for (const auto& signs : signs_all)
                by_label.emplace(exterior::plane_from_label(part, signs), part);
        for (const auto& fp : fam.planes) {
            auto it = by_label.find(fp.plane);
            if (it == by_label.end() ||
                it->second != plane_partition(fam, fp))
                rep.partitions_match_labels = false;
        }
    }

    for (std::size_t x = 0; x < info.size(); ++x)
        for (std::size_t y = x + 1; y < info.size(); ++y) {
            ++rep.pair_count;
            const int d = exterior::plane_intersection_dimension(
                info[x].fp->plane, info[y].fp->plane);
            ++rep.dimension_census[d];
            const bool both_special =
                info[x].fp->type == "1b" && info[y].fp->type == "1b";
            const bool disjoint = partitions_disjoint(info[x].part, info[y].part);
            const bool predicted =
                both_special ? disjoint : (info[x].part == info[y].part ||
                                           disjoint);
            if (predicted != (d == 0)) ++rep.exceptions;
        }
    return rep;
}

// ---------------------------------------------------------------------------
// complete incident configurations
// ---------------------------------------------------------------------------

struct Configuration {
    std::vector<PairTriple> factorization;  // 5 pairwise-disjoint partitions
    std::set<exterior::Plane> planes;       // the 20 planes
    std::vector<std::string> labels;        // catalog labels, sorted
};

struct ConfigurationReport {
    int family = 0;
    std::vector<Configuration> configurations;  // expect 6
    bool all_pairwise_incident = false;
    bool none_extendable = false;         // complete within the 60
    bool matching_config_present = false;  // one uses the 5 matching partitions
    bool matching_equals_incident20 = false;  // and equals the catalog 20
    bool orbit_transitive = false;        // S6 permutes the 6 transitively
    std::size_t stabilizer_order = 0;     // 120
    std::size_t stabilizer_kernel = 0;    // 1: faithful on the 5 partitions
    std::size_t induced_permutations = 0;  // 120 distinct images in S5

    bool pass() const {
        return configurations.size() == 6 && all_pairwise_incident &&
               none_extendable && matching_config_present &&
               matching_equals_incident20 && orbit_transitive &&
               stabilizer_order == 120 && stabilizer_kernel == 1 &&
               induced_permutations == 120;
    }
};

namespace detail {

inline exterior::Plane permuted_plane(const exterior::Plane& p,
                                      const Perm<6>& g) {
    Matrix<Gq> rows(3, 6);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) rows(r, c) = p.basis()(r, g(c));
    return exterior::Plane(std::move(rows));
}

inline PairTriple permuted_partition(const PairTriple& part, const Perm<6>& g) {
    const Perm<6> inv = g.inverse();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [i, j] : part) pairs.emplace_back(inv(i), inv(j));
    return canonical_partition(std::move(pairs));
}

}  // namespace detail

inline ConfigurationReport complete_incident_sets(int family) {
    ConfigurationReport rep;
    rep.family = family;
    const auto inst = build_family_planes(family, Gq(-1, 2));
    const std::string base_type = family == 1 ? "1b" : "2a";

    std::map<PairTriple, std::vector<const FamilyPlane*>> base, others;
    for (const auto& fp : inst.planes) {
        const PairTriple part = plane_partition(inst, fp);
        (fp.type == base_type ? base : others)[part].push_back(&fp);
    }
    std::vector<PairTriple> parts;
    for (const auto& [part, _] : base) parts.push_back(part);

    // catalog labels for the dump: family 1 uses even signs, family 2 odd
    std::map<exterior::Plane, std::string> label_of;
    const auto& signs_all =
        family == 1 ? even_sign_classes() : exterior::odd_sign_classes();
    for (const auto& part : exterior::partitions6())
        for (const auto& signs : signs_all) {
            exterior::LabeledPlane lp{part, signs,
                                      exterior::plane_from_label(part, signs)};
            label_of.emplace(lp.plane, lp.label());
        }

    rep.all_pairwise_incident = true;
    rep.none_extendable = true;
    const std::size_t n = parts.size();
    std::array<std::size_t, 5> pick{};
    auto emit = [&](const std::array<std::size_t, 5>& sel) {
        Configuration cfg;
        std::vector<const FamilyPlane*> group;
        for (std::size_t s : sel) {
            cfg.factorization.push_back(parts[s]);
            for (const auto* fp : base[parts[s]]) group.push_back(fp);
            for (const auto* fp : others[parts[s]]) group.push_back(fp);
        }
        for (const auto* fp : group) {
            cfg.planes.insert(fp->plane);
            auto it = label_of.find(fp->plane);
            cfg.labels.push_back(it == label_of.end() ? std::string("?")
                                                      : it->second);
        }
        std::sort(cfg.labels.begin(), cfg.labels.end());
        if (group.size() != 20) rep.all_pairwise_incident = false;
        for (std::size_t x = 0; x < group.size(); ++x)
            for (std::size_t y = x + 1; y < group.size(); ++y)
                if (exterior::plane_intersection_dimension(
                        group[x]->plane, group[y]->plane) != 0)
                    rep.all_pairwise_incident = false;
        for (const auto& fp : inst.planes) {
            if (cfg.planes.count(fp.plane)) continue;
            bool extends = true;
            for (const auto* g : group)
                if (exterior::plane_intersection_dimension(fp.plane,
                                                           g->plane) != 0) {
                    extends = false;
                    break;
                }
            if (extends) rep.none_extendable = false;
        }
        rep.configurations.push_back(std::move(cfg));
    };
    // all 5-subsets of the partitions that are pairwise disjoint
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
                    for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
                        bool ok = true;
                        for (int x = 0; x < 5 && ok; ++x)
                            for (int y = x + 1; y < 5 && ok; ++y)
                                ok = partitions_disjoint(parts[pick[x]],
                                                         parts[pick[y]]);
                        if (ok) emit(pick);
                    }

    std::set<PairTriple> matching(exterior::matching_partitions().begin(),
                                  exterior::matching_partitions().end());
    for (const auto& cfg : rep.configurations) {
        std::set<PairTriple> fac(cfg.factorization.begin(),
                                 cfg.factorization.end());
        if (fac != matching) continue;
        rep.matching_config_present = true;
        // family 2 reproduces the odd-sign catalog 20; family 1 its
        // even-sign counterpart over the same five partitions
        std::set<exterior::Plane> expected20;
        for (const auto& part : exterior::matching_partitions())
            for (const auto& signs : signs_all)
                expected20.insert(exterior::plane_from_label(part, signs));
        rep.matching_equals_incident20 = (cfg.planes == expected20);
    }

    if (!rep.configurations.empty()) {
        const auto& cfg0 = rep.configurations.front();
        std::set<std::size_t> hit;
        std::vector<Perm<6>> stabilizer;
        for (const auto& g : exact::all_permutations<6>()) {
            std::set<exterior::Plane> image;
            for (const auto& p : cfg0.planes)
                image.insert(detail::permuted_plane(p, g));
            for (std::size_t k = 0; k < rep.configurations.size(); ++k)
                if (image == rep.configurations[k].planes) hit.insert(k);
            if (image == cfg0.planes) stabilizer.push_back(g);
        }
        rep.orbit_transitive = hit.size() == rep.configurations.size();
        rep.stabilizer_order = stabilizer.size();

        std::set<std::array<std::size_t, 5>> induced;
        for (const auto& g : stabilizer) {
            std::array<std::size_t, 5> image{};
            bool fixes_all = true;
            for (std::size_t k = 0; k < 5; ++k) {
                const PairTriple img =
                    detail::permuted_partition(cfg0.factorization[k], g);
                std::size_t pos = 5;
                for (std::size_t m = 0; m < 5; ++m)
                    if (cfg0.factorization[m] == img) pos = m;
                image[k] = pos;
                if (pos != k) fixes_all = false;
            }
            induced.insert(image);
            if (fixes_all) ++rep.stabilizer_kernel;
        }
        rep.induced_permutations = induced.size();
    }
    return rep;
}

// ---------------------------------------------------------------------------
// intersection points of the 20 incident planes
// ---------------------------------------------------------------------------

struct TwentyPlanePointsReport {
    bool all_pairs_meet_in_point = false;          // 190 pairs, one point each
    std::map<std::size_t, std::size_t> census;     // planes-through -> count
    bool quintuple_equals_even_sign = false;       // the 16 == (+-1)^6 even
    bool one_plane_per_partition = false;          // at each of the 16
    bool pairwise_same_partition = false;          // at each of the 30
    bool four_points_per_plane = false;            // 4 of the 16 on each plane
    bool example_point_found = false;  // (0:1:0:0:1:0) on 0-2,1-4,3-5 & 0+2,1-4,3+5

    bool pass() const {
        const std::map<std::size_t, std::size_t> want{{2, 30}, {5, 16}};
        return all_pairs_meet_in_point && census == want &&
               quintuple_equals_even_sign && one_plane_per_partition &&
               pairwise_same_partition && four_points_per_plane &&
               example_point_found;
    }
};

inline TwentyPlanePointsReport twenty_plane_points() {
    TwentyPlanePointsReport rep;
    const auto planes = exterior::incident_planes_20();

    auto on_plane = [](const exterior::Plane& p, const std::vector<Gq>& pt) {
        Matrix<Gq> stack(4, 6);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 6; ++c) stack(r, c) = p.basis()(r, c);
        for (int c = 0; c < 6; ++c) stack(3, c) = pt[c];
        return exact::matrix_rank(stack) == 3;
    };

    rep.all_pairs_meet_in_point = true;
    std::set<std::vector<Gq>> points;
    for (std::size_t a = 0; a < planes.size(); ++a)
        for (std::size_t b = a + 1; b < planes.size(); ++b) {
            auto basis = exterior::plane_intersection_basis(planes[a].plane,
                                                            planes[b].plane);
            if (basis.size() != 1) {
                rep.all_pairs_meet_in_point = false;
                continue;
            }
            points.insert(detail::normalize_form(basis[0]));
        }

    rep.one_plane_per_partition = true;
    rep.pairwise_same_partition = true;
    std::map<const exterior::LabeledPlane*, std::size_t> deep_per_plane;
    std::set<std::vector<Gq>> quintuple;
    for (const auto& pt : points) {
        std::vector<const exterior::LabeledPlane*> through;
        for (const auto& lp : planes)
            if (on_plane(lp.plane, pt)) through.push_back(&lp);
        ++rep.census[through.size()];
        if (through.size() == 5) {
            quintuple.insert(pt);
            std::set<PairTriple> parts;
            for (const auto* lp : through) {
                parts.insert(lp->pairs);
                ++deep_per_plane[lp];
            }
            if (parts.size() != 5) rep.one_plane_per_partition = false;
        } else if (through.size() == 2) {
            if (through[0]->pairs != through[1]->pairs)
                rep.pairwise_same_partition = false;
        }
    }

    std::set<std::vector<Gq>> even_sign;
    for (int mask = 0; mask < 64; ++mask) {
        if (__builtin_popcount(mask) % 2 != 0) continue;
        std::vector<Gq> v(6);
        for (int b = 0; b < 6; ++b) v[b] = (mask >> b) & 1 ? Gq(-1) : Gq(1);
        even_sign.insert(detail::normalize_form(std::move(v)));
    }
    rep.quintuple_equals_even_sign = (quintuple == even_sign);

    rep.four_points_per_plane = deep_per_plane.size() == planes.size();
    for (const auto& [lp, cnt] : deep_per_plane)
        if (cnt != 4) rep.four_points_per_plane = false;

    const std::vector<Gq> example{Gq(0), Gq(1), Gq(0), Gq(0), Gq(1), Gq(0)};
    std::set<std::string> through_example;
    for (const auto& lp : planes)
        if (on_plane(lp.plane, example)) through_example.insert(lp.label());
    rep.example_point_found =
        through_example ==
        std::set<std::string>{"0-2,1-4,3-5", "0+2,1-4,3+5"};
    return rep;
}

}  // namespace epwv::combinatorics
