#pragma once
// Symplectic reflections in (G,i) and the census of their fixed surfaces:
// each of the 30 reflections fixes four disjoint abelian surfaces in E^4,
// giving 120 surfaces that pair up by point sets into 60, with the paired
// reflections M and -M conjugate inside G; each invariant divisor contains
// 30 of the surfaces in 15 equal-point-set pairs.  Also the holomorphic
// Lefschetz balance for the order-4 automorphism.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "epwv/abelian/gaussian_matrix.hpp"
#include "epwv/abelian/generators.hpp"
#include "epwv/abelian/group.hpp"
#include "epwv/abelian/incidence.hpp"
#include "epwv/abelian/torsion.hpp"
#include "epwv/exact/matrix.hpp"
#include "epwv/exact/smith.hpp"

namespace epwv::abelian {

struct ReflectionReport {
    std::vector<GiMat> reflections;   // elements of (G,i) with rank(M - I) = 2
    bool matches_expected = false;    // set equals {±T_j} ∪ {±i T_a T_b, a < b}
    std::size_t in_g = 0;             // 10 of them already lie in G
    bool in_g_are_involutions = false;  // those are exactly {±T_j}
    bool rank_t0_is_two = false;
    bool minus_identity_excluded = false;  // rank(-I - I) = 4

    bool pass() const {
        return reflections.size() == 30 && matches_expected && in_g == 10 &&
               in_g_are_involutions && rank_t0_is_two &&
               minus_identity_excluded;
    }
};

inline ReflectionReport symplectic_reflections() {
    const auto& s = standard_generators();
    const auto& t = group_tables();
    const GiMat id = GiMat::identity();
    ReflectionReport report;

    for (const auto& m : t.gi)
        if (gi_rank(m - id) == 2) report.reflections.push_back(m);

    std::set<GiMat> expected;
    for (const auto& tj : s.T) {
        expected.insert(tj);
        expected.insert(-tj);
    }
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) {
            const GiMat ab = s.T[a] * s.T[b];
            expected.insert(ab.scaled(Gi{0, 1}));
            expected.insert(ab.scaled(Gi{0, -1}));
        }
    report.matches_expected =
        (std::set<GiMat>(report.reflections.begin(), report.reflections.end()) ==
         expected);

    std::set<GiMat> in_g_set;
    for (const auto& m : t.g)
        if (gi_rank(m - id) == 2) in_g_set.insert(m);
    report.in_g = in_g_set.size();
    std::set<GiMat> plus_minus_t;
    for (const auto& tj : s.T) {
        plus_minus_t.insert(tj);
        plus_minus_t.insert(-tj);
    }
    report.in_g_are_involutions = (in_g_set == plus_minus_t);

    report.rank_t0_is_two = (gi_rank(s.T0 - id) == 2);
    report.minus_identity_excluded = (gi_rank(-id - id) == 4);
    return report;
}

// One connected component of the fixed locus of a reflection, recorded by
// the four G-fixed half-periods it carries.
struct FixedSurface {
    GiMat reflection;
    std::array<std::uint8_t, 4> points{};  // nibbles, ascending
};

namespace detail {

// Doubled coordinates of the half-period (1+i)/2 * a in Z^8.
inline std::array<long, 8> doubled_coords(std::uint8_t a) {
    std::array<long, 8> v{};
    for (int j = 0; j < 4; ++j)
        if (a & (1 << j)) v[2 * j] = v[2 * j + 1] = 1;
    return v;
}

// Whether the half-period a lies on the fixed locus of the matrix with
// realified difference b = realify(M - I): the doubled image must be even.
inline bool on_fixed_locus(const exact::ZMatrix& b, std::uint8_t a) {
    const auto v = doubled_coords(a);
    for (std::size_t c = 0; c < 8; ++c) {
        mpz_class acc = 0;
        for (std::size_t r = 0; r < 8; ++r)
            if (v[r] != 0) acc += v[r] * b(r, c);
        if (acc % 2 != 0) return false;
    }
    return true;
}

// Whether the half-periods a and c lie on the same component: their
// difference must map into the row-image lattice of b, tested through the
// Smith decomposition (left * b * right = diag).
inline bool same_component(const exact::ZMatrix& b,
                           const exact::SmithDecomposition& snf,
                           std::uint8_t a, std::uint8_t c) {
    const auto va = doubled_coords(a);
    const auto vc = doubled_coords(c);
    std::array<mpz_class, 8> half{};
    for (std::size_t col = 0; col < 8; ++col) {
        mpz_class acc = 0;
        for (std::size_t r = 0; r < 8; ++r)
            if (va[r] != vc[r]) acc += (va[r] - vc[r]) * b(r, col);
        if (acc % 2 != 0) return false;  // cannot happen for on-locus points
        half[col] = acc / 2;
    }
    for (std::size_t k = 0; k < 8; ++k) {
        mpz_class acc = 0;
        for (std::size_t r = 0; r < 8; ++r) acc += half[r] * snf.right(r, k);
        const mpz_class d = (k < snf.diag.size()) ? snf.diag[k] : mpz_class(0);
        if (d == 0) {
            if (acc != 0) return false;
        } else if (acc % d != 0) {
            return false;
        }
    }
    return true;
}

// Canonical form of the tangent plane of the fixed locus: reduced row
// echelon basis of the left kernel of M - I over Q(i).
inline std::vector<exact::Gq> tangent_plane_key(const GiMat& m) {
    const auto diff = to_rational(m - GiMat::identity()).transpose();
    const auto kernel = exact::matrix_kernel(diff);
    exact::Matrix<exact::Gq> rows(kernel.size(), 4);
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (std::size_t c = 0; c < 4; ++c) rows(r, c) = kernel[r][c];
    const auto reduced = exact::rref(rows);
    return reduced.entries();
}

}  // namespace detail

struct SurfaceCensusReport {
    std::vector<FixedSurface> surfaces;      // 120
    bool divisor_products_four = false;      // Smith product 4 per reflection
    bool sixteen_points_each = false;        // all 16 fixed points on each locus
    bool four_components_each = false;       // 4 components per reflection
    bool four_points_per_component = false;
    bool point_sets_paired = false;          // every 4-set appears exactly twice
    bool pairs_are_opposite = false;         // its two owners are M and -M
    bool tangents_separate_pairs = false;    // (4-set, tangent plane) is unique
    bool t0_kernels_differ = false;          // ker(T0 - I) != ker(-T0 - I)
    bool t0_kernel_unique = false;           // no other reflection shares it
    bool opposite_conjugate_in_g = false;    // g M g^-1 = -M solvable in G
    bool per_divisor_thirty = false;         // 30 surfaces inside each divisor
    bool per_divisor_fifteen_pairs = false;  // they pair into 15 equal point sets
    bool four_divisors_per_surface = false;

    bool pass() const {
        return surfaces.size() == 120 && divisor_products_four &&
               sixteen_points_each && four_components_each &&
               four_points_per_component && point_sets_paired &&
               pairs_are_opposite && tangents_separate_pairs &&
               t0_kernels_differ && t0_kernel_unique &&
               opposite_conjugate_in_g && per_divisor_thirty &&
               per_divisor_fifteen_pairs && four_divisors_per_surface;
    }
};

inline SurfaceCensusReport fixed_surface_census() {
    const auto& s = standard_generators();
    const auto& t = group_tables();
    const GiMat id = GiMat::identity();
    const auto reflections = symplectic_reflections().reflections;
    SurfaceCensusReport report;

    report.divisor_products_four = true;
    report.sixteen_points_each = true;
    report.four_components_each = true;
    report.four_points_per_component = true;
    for (const auto& m : reflections) {
        const exact::ZMatrix b = realify(m - id);
        const auto snf = exact::smith_normal_form(b);
        if (exact::nonzero_divisor_product(snf) != 4)
            report.divisor_products_four = false;

        std::vector<std::uint8_t> on;
        for (int a = 0; a < 16; ++a)
            if (detail::on_fixed_locus(b, static_cast<std::uint8_t>(a)))
                on.push_back(static_cast<std::uint8_t>(a));
        if (on.size() != 16) report.sixteen_points_each = false;

        std::vector<std::vector<std::uint8_t>> components;
        for (const auto a : on) {
            bool placed = false;
            for (auto& comp : components)
                if (detail::same_component(b, snf, a, comp.front())) {
                    comp.push_back(a);
                    placed = true;
                    break;
                }
            if (!placed) components.push_back({a});
        }
        if (components.size() != 4) report.four_components_each = false;
        for (const auto& comp : components) {
            if (comp.size() != 4) {
                report.four_points_per_component = false;
                continue;
            }
            FixedSurface surf;
            surf.reflection = m;
            std::copy(comp.begin(), comp.end(), surf.points.begin());
            std::sort(surf.points.begin(), surf.points.end());
            report.surfaces.push_back(surf);
        }
    }

    // Point-set pairing: each 4-set occurs twice, owned by M and -M, and the
    // tangent planes distinguish the two owners.
    std::map<std::array<std::uint8_t, 4>, std::vector<GiMat>> by_set;
    for (const auto& surf : report.surfaces)
        by_set[surf.points].push_back(surf.reflection);
    report.point_sets_paired = !by_set.empty();
    report.pairs_are_opposite = !by_set.empty();
    for (const auto& [points, owners] : by_set) {
        if (owners.size() != 2) report.point_sets_paired = false;
        else if (!(owners[0] == -owners[1])) report.pairs_are_opposite = false;
    }

    std::map<GiMat, std::vector<exact::Gq>> tangent;
    for (const auto& m : reflections) tangent[m] = detail::tangent_plane_key(m);
    std::set<std::pair<std::array<std::uint8_t, 4>, std::vector<exact::Gq>>> keys;
    for (const auto& surf : report.surfaces)
        keys.insert({surf.points, tangent[surf.reflection]});
    report.tangents_separate_pairs = (keys.size() == report.surfaces.size());

    const auto t0_key = tangent[s.T0];
    report.t0_kernels_differ = (tangent[-s.T0] != t0_key);
    report.t0_kernel_unique = true;
    for (const auto& m : reflections)
        if (!(m == s.T0) && tangent[m] == t0_key) report.t0_kernel_unique = false;

    report.opposite_conjugate_in_g = true;
    for (const auto& m : reflections) {
        bool found = false;
        for (const auto& g : t.g)
            if (g * m * gi_inverse(g) == -m) {
                found = true;
                break;
            }
        if (!found) report.opposite_conjugate_in_g = false;
    }

    // Divisor census: a surface lies inside D + p when its four points do.
    const auto incidence = divisor_incidence_table();
    report.per_divisor_thirty = true;
    report.per_divisor_fifteen_pairs = true;
    std::map<std::size_t, std::size_t> divisors_per_surface;
    for (int p = 0; p < 16; ++p) {
        std::vector<std::size_t> inside;
        for (std::size_t k = 0; k < report.surfaces.size(); ++k) {
            const auto& surf = report.surfaces[k];
            bool all_in = true;
            for (const auto q : surf.points)
                if (!incidence.table[p][q]) all_in = false;
            if (all_in) {
                inside.push_back(k);
                ++divisors_per_surface[k];
            }
        }
        if (inside.size() != 30) report.per_divisor_thirty = false;
        std::map<std::array<std::uint8_t, 4>, std::size_t> sets;
        for (const auto k : inside) ++sets[report.surfaces[k].points];
        if (sets.size() != 15) report.per_divisor_fifteen_pairs = false;
        for (const auto& [points, count] : sets)
            if (count != 2) report.per_divisor_fifteen_pairs = false;
    }
    report.four_divisors_per_surface =
        divisors_per_surface.size() == report.surfaces.size() &&
        std::all_of(divisors_per_surface.begin(), divisors_per_surface.end(),
                    [](const auto& kv) { return kv.second == 4; });
    return report;
}

struct LefschetzReport {
    Gi denominator{};        // (1 - i)^4 = -4
    int h_plus = 0;          // 6
    int h_minus = 0;         // 10

    bool pass() const {
        return denominator == Gi{-4, 0} && h_plus == 6 && h_minus == 10;
    }
};

// Holomorphic Lefschetz balance for multiplication by i on E^4: each of the
// 16 fixed points contributes 1/det(I - i*I) = 1/(1-i)^4, so the number is
// 16/(1-i)^4 = -4; combined with h_plus + h_minus = 16 this forces the
// eigenspace dimensions (6, 10).
inline LefschetzReport lefschetz_balance() {
    LefschetzReport report;
    const Gi w{1, -1};
    report.denominator = w * w * w * w;
    if (report.denominator.im == 0 && report.denominator.re != 0 &&
        16 % report.denominator.re == 0) {
        const int balance = static_cast<int>(16 / report.denominator.re);
        report.h_plus = (16 + balance) / 2;
        report.h_minus = 16 - report.h_plus;
    }
    return report;
}

}  // namespace epwv::abelian
