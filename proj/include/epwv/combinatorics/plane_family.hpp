#pragma once
// Construction of the 60 planes attached to a 16-hyperplane family: every
// rank-3 quadruple of the 16 forms cuts out a plane, planes are collected up
// to equality with their full sets of containing hyperplanes, and each is
// typed ("1a"/"1b" by whether the containing set includes the hyperplane H;
// "2a"/"2b" by whether all four containing forms are triple forms).
//
// At the special parameter t = -1/2 the two families reproduce the labeled
// catalog planes V_{i±j,k±l,m±n}: family 2 gives exactly the 60 odd-sign
// planes (type 2a = the 15 all-minus labels) and family 1 the 60 even-sign
// planes (type 1b = the 15 all-plus labels).

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epwv/combinatorics/hyperplanes.hpp"
#include "epwv/exact/matrix.hpp"
#include "epwv/exterior/planes_catalog.hpp"

namespace epwv::combinatorics {

using exact::Matrix;

struct FamilyPlane {
    exterior::Plane plane;
    std::vector<int> containing;  // indices of hyperplanes containing it
    std::string type;             // "1a", "1b", "2a", "2b"
};

struct PlaneFamilyInstance {
    int family = 0;
    Gq t;
    std::vector<TwoValueHyperplane> hyperplanes;  // the 16 forms
    std::vector<FamilyPlane> planes;              // discovery order
};

namespace detail {

inline bool form_vanishes_on_plane(const std::vector<Gq>& form,
                                   const exterior::Plane& plane) {
    for (std::size_t r = 0; r < 3; ++r) {
        Gq dot(0);
        for (std::size_t c = 0; c < 6; ++c) dot += form[c] * plane.basis()(r, c);
        if (!dot.is_zero()) return false;
    }
    return true;
}

inline std::string classify_plane(int family,
                                  const std::vector<TwoValueHyperplane>& hps,
                                  const std::vector<int>& containing) {
    if (family == 1) {
        for (int i : containing)
            if (hps[i].name == "H") return "1b";
        return "1a";
    }
    int triples = 0;
    for (int i : containing)
        if (hps[i].name.size() == 4) ++triples;
    return triples == 4 ? "2a" : "2b";
}

}  // namespace detail

// Enumerate all rank-3 quadruples of the 16 forms; each cuts out the plane
// equal to its kernel.  Planes are deduplicated in discovery order and each
// one carries its full containing set.
inline PlaneFamilyInstance build_family_planes(int family, const Gq& t) {
    PlaneFamilyInstance inst;
    inst.family = family;
    inst.t = t;
    inst.hyperplanes = family_hyperplanes(family, t);

    std::map<exterior::Plane, std::size_t> index;
    for (int a = 0; a < 16; ++a)
        for (int b = a + 1; b < 16; ++b)
            for (int c = b + 1; c < 16; ++c)
                for (int d = c + 1; d < 16; ++d) {
                    Matrix<Gq> stack(4, 6);
                    const int rows[4] = {a, b, c, d};
                    for (int r = 0; r < 4; ++r)
                        for (int col = 0; col < 6; ++col)
                            stack(r, col) = inst.hyperplanes[rows[r]].coeffs[col];
                    if (exact::matrix_rank(stack) != 3) continue;
                    auto kernel = exact::matrix_kernel(stack);
                    if (kernel.size() != 3) continue;
                    exterior::Plane plane = exterior::Plane::from_rows(kernel);
                    if (index.emplace(plane, inst.planes.size()).second)
                        inst.planes.push_back(
                            FamilyPlane{std::move(plane), {}, {}});
                }

    for (auto& fp : inst.planes) {
        for (int i = 0; i < 16; ++i)
            if (detail::form_vanishes_on_plane(inst.hyperplanes[i].coeffs,
                                               fp.plane))
                fp.containing.push_back(i);
        fp.type = detail::classify_plane(family, inst.hyperplanes, fp.containing);
    }
    return inst;
}

struct PlaneFamilyReport {
    int family = 0;
    Gq t;
    std::size_t plane_count = 0;                   // 60 at clean parameters
    std::map<std::string, std::size_t> type_counts;  // {1a:45,1b:15}/{2a:15,2b:45}
    bool all_in_exactly_four = false;
    // containing-set sizes of offending planes (empty at clean parameters)
    std::vector<std::size_t> degenerate_sizes;

    bool pass() const {
        const std::map<std::string, std::size_t> want =
            family == 1 ? std::map<std::string, std::size_t>{{"1a", 45},
                                                             {"1b", 15}}
                        : std::map<std::string, std::size_t>{{"2a", 15},
                                                             {"2b", 45}};
        return plane_count == 60 && type_counts == want && all_in_exactly_four;
    }
};

inline PlaneFamilyReport plane_family_report(const PlaneFamilyInstance& inst) {
    PlaneFamilyReport rep;
    rep.family = inst.family;
    rep.t = inst.t;
    rep.plane_count = inst.planes.size();
    rep.all_in_exactly_four = true;
    for (const auto& fp : inst.planes) {
        ++rep.type_counts[fp.type];
        if (fp.containing.size() != 4) {
            rep.all_in_exactly_four = false;
            rep.degenerate_sizes.push_back(fp.containing.size());
        }
    }
    return rep;
}

inline PlaneFamilyReport plane_family_report(int family, const Gq& t) {
    return plane_family_report(build_family_planes(family, t));
}

// Sign classes with an even number of '-' entries (family-1 labels).
inline const std::array<std::array<int, 3>, 4>& even_sign_classes() {
    static const std::array<std::array<int, 3>, 4> s = {
        std::array<int, 3>{1, 1, 1}, std::array<int, 3>{1, -1, -1},
        std::array<int, 3>{-1, 1, -1}, std::array<int, 3>{-1, -1, 1}};
    return s;
}

struct LabelCatalogReport {
    int family = 0;
    bool planes_match_catalog = false;  // 60 planes == labeled sign-class planes
    bool special_type_matches = false;  // 1b == all-plus / 2a == all-minus

    bool pass() const { return planes_match_catalog && special_type_matches; }
};

// At t = -1/2, compare the constructed planes against the labeled catalog.
inline LabelCatalogReport label_catalog_match(const PlaneFamilyInstance& inst) {
    LabelCatalogReport rep;
    rep.family = inst.family;

    std::set<exterior::Plane> built, special;
    for (const auto& fp : inst.planes) {
        built.insert(fp.plane);
        if (fp.type == "1b" || fp.type == "2a") special.insert(fp.plane);
    }

    std::set<exterior::Plane> catalog, uniform;
    const auto& signs_all = inst.family == 1
                                ? even_sign_classes()
                                : exterior::odd_sign_classes();
    const std::array<int, 3> uniform_signs =
        inst.family == 1 ? std::array<int, 3>{1, 1, 1}
                         : std::array<int, 3>{-1, -1, -1};
    for (const auto& part : exterior::partitions6())
        for (const auto& signs : signs_all) {
            exterior::Plane p = exterior::plane_from_label(part, signs);
            catalog.insert(p);
            if (signs == uniform_signs) uniform.insert(p);
        }
    rep.planes_match_catalog = (built == catalog);
    rep.special_type_matches = (special == uniform);
    return rep;
}

inline LabelCatalogReport label_catalog_match(int family) {
    return label_catalog_match(build_family_planes(family, Gq(-1, 2)));
}

}  // namespace epwv::combinatorics
