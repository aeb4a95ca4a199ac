#pragma once
// Orbit structure of the symplectic forms and tangent-cone quadrics under
// U(H): the six-element orbit of E5 modulo unit scalars and the induced
// surjection U(H) -> S6 with kernel (G,i); the sign characters of q012 under
// the T_j; the ten-element orbit of the tangent-cone quadrics; and the
// orbits of the stabilizer subgroup on the 16 G-fixed half-periods.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "epwv/abelian/gaussian_matrix.hpp"
#include "epwv/abelian/generators.hpp"
#include "epwv/abelian/group.hpp"
#include "epwv/abelian/torsion.hpp"

namespace epwv::abelian {

namespace detail {

// Sorted canonical representatives of the U(H)-orbit of E5 under
// g X g^t, taken modulo unit scalars.
inline const std::vector<GiMat>& e5_orbit_classes() {
    static const std::vector<GiMat> orbit = [] {
        const auto& s = standard_generators();
        std::set<GiMat> seen;
        std::vector<GiMat> frontier;
        seen.insert(canon_unit(s.E5));
        frontier.push_back(s.E5);
        while (!frontier.empty()) {
            std::vector<GiMat> next;
            for (const auto& x : frontier)
                for (const GiMat* g : {&s.N5, &s.N01, &s.N45}) {
                    GiMat y = *g * x * g->transpose();
                    if (seen.insert(canon_unit(y)).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return std::vector<GiMat>(seen.begin(), seen.end());
    }();
    return orbit;
}

}  // namespace detail

// Permutation of the orbit classes of E5 induced by one element of U(H):
// entry k is the index of the class of g * orb[k] * g^t.  Throws when the
// action does not permute the classes.
inline std::array<int, 6> symplectic_permutation(const GiMat& g) {
    const auto& orbit = detail::e5_orbit_classes();
    if (orbit.size() != 6)
        throw std::logic_error("symplectic_permutation: orbit size is not 6");
    std::array<int, 6> p{};
    for (std::size_t k = 0; k < 6; ++k) {
        const GiMat image = canon_unit(g * orbit[k] * g.transpose());
        const auto it = std::lower_bound(orbit.begin(), orbit.end(), image);
        if (it == orbit.end() || !(*it == image))
            throw std::logic_error("symplectic_permutation: image not in orbit");
        p[k] = static_cast<int>(it - orbit.begin());
    }
    return p;
}

struct Sigma6QuotientReport {
    std::size_t orbit_size = 0;     // 6
    std::size_t image_order = 0;    // 720
    std::size_t kernel_order = 0;   // 64
    bool kernel_is_gi = false;      // kernel set == (G,i)
    bool e4_sign_pattern = false;   // T_j E4 T_j^t = -E4 for j != 4, +E4 for j = 4

    bool pass() const {
        return orbit_size == 6 && image_order == 720 && kernel_order == 64 &&
               kernel_is_gi && e4_sign_pattern;
    }
};

inline Sigma6QuotientReport sigma6_quotient() {
    const auto& s = standard_generators();
    const auto& t = group_tables();
    Sigma6QuotientReport report;
    report.orbit_size = detail::e5_orbit_classes().size();
    if (report.orbit_size != 6) return report;

    std::set<std::array<int, 6>> image;
    std::vector<GiMat> kernel;
    std::array<int, 6> identity{};
    for (int k = 0; k < 6; ++k) identity[k] = k;
    for (const auto& g : t.uh) {
        const auto p = symplectic_permutation(g);
        image.insert(p);
        if (p == identity) kernel.push_back(g);
    }
    report.image_order = image.size();
    report.kernel_order = kernel.size();
    report.kernel_is_gi = (kernel == t.gi);  // both sorted ascending

    report.e4_sign_pattern = true;
    for (std::size_t j = 0; j < 5; ++j) {
        const GiMat r = s.T[j] * s.E4 * s.T[j].transpose();
        const GiMat expected = (j == 4) ? s.E4 : -s.E4;
        if (r != expected) report.e4_sign_pattern = false;
    }
    return report;
}

struct QuadraticFormOrbitReport {
    std::array<int, 5> epsilon{};     // +1, +1, +1, -1, -1
    std::size_t distinct_forms = 0;   // 10, from N5^j q012 and N5^j q013
    bool gluing = false;              // N01 N5 q012 (N01 N5)^t == N5^2 q013 (N5^2)^t
    bool single_uh_orbit = false;     // the ten classes are one U(H)-orbit
    std::size_t stabilizer_order = 0; // 4608
    bool stabilizer_matches = false;  // equals <N01, N45, Nf>

    bool pass() const {
        return epsilon == std::array<int, 5>{1, 1, 1, -1, -1} &&
               distinct_forms == 10 && gluing && single_uh_orbit &&
               stabilizer_order == 4608 && stabilizer_matches;
    }
};

inline QuadraticFormOrbitReport quadratic_form_orbits() {
    const auto& s = standard_generators();
    const auto& t = group_tables();
    QuadraticFormOrbitReport report;

    for (std::size_t j = 0; j < 5; ++j) {
        const GiMat r = s.T[j] * s.q012 * s.T[j].transpose();
        if (r == s.q012)
            report.epsilon[j] = 1;
        else if (r == -s.q012)
            report.epsilon[j] = -1;
        else
            report.epsilon[j] = 0;
    }

    std::vector<GiMat> powers{GiMat::identity()};
    for (int j = 0; j < 4; ++j) powers.push_back(powers.back() * s.N5);
    std::set<GiMat> classes;
    for (const GiMat* q : {&s.q012, &s.q013})
        for (const auto& p : powers)
            classes.insert(canon_unit(p * *q * p.transpose()));
    report.distinct_forms = classes.size();

    const GiMat g1 = s.N01 * s.N5;
    const GiMat g2 = s.N5 * s.N5;
    report.gluing =
        (g1 * s.q012 * g1.transpose() == g2 * s.q013 * g2.transpose());

    std::set<GiMat> orbit;
    std::vector<GiMat> stabilizer;
    const GiMat q012_class = canon_unit(s.q012);
    for (const auto& g : t.uh) {
        const GiMat image = canon_unit(g * s.q012 * g.transpose());
        orbit.insert(image);
        if (image == q012_class) stabilizer.push_back(g);
    }
    report.single_uh_orbit = (orbit == classes);
    report.stabilizer_order = stabilizer.size();
    report.stabilizer_matches = (stabilizer == t.uh012);  // both sorted
    return report;
}

struct OdpOrbitReport {
    std::size_t stabilizer_order = 0;        // 4608
    std::vector<std::size_t> orbit_sizes;    // 1, 6, 9
    std::vector<std::uint8_t> six_orbit;     // the size-6 orbit, sorted nibbles
    bool six_matches_listed = false;         // equals the listed off-divisor points
    bool origin_alone = false;               // the orbit of 0 is {0}

    bool pass() const {
        return stabilizer_order == 4608 &&
               orbit_sizes == std::vector<std::size_t>{1, 6, 9} &&
               six_matches_listed && origin_alone;
    }
};

inline OdpOrbitReport odp_orbit_analysis() {
    const auto& s = standard_generators();
    const auto& t = group_tables();
    OdpOrbitReport report;
    report.stabilizer_order = t.uh012.size();

    const std::array<const GiMat*, 3> gens = {&s.N01, &s.N45, &s.Nf};
    std::array<bool, 16> seen{};
    for (int start = 0; start < 16; ++start) {
        if (seen[start]) continue;
        std::set<std::uint8_t> orbit{static_cast<std::uint8_t>(start)};
        std::vector<std::uint8_t> frontier{static_cast<std::uint8_t>(start)};
        while (!frontier.empty()) {
            std::vector<std::uint8_t> next;
            for (const auto a : frontier)
                for (const GiMat* g : gens) {
                    const std::uint8_t b = act_half_point(*g, a);
                    if (orbit.insert(b).second) next.push_back(b);
                }
            frontier = std::move(next);
        }
        for (const auto a : orbit) seen[a] = true;
        report.orbit_sizes.push_back(orbit.size());
        if (orbit.size() == 6)
            report.six_orbit.assign(orbit.begin(), orbit.end());
        if (orbit.count(0) && orbit.size() == 1) report.origin_alone = true;
    }
    std::sort(report.orbit_sizes.begin(), report.orbit_sizes.end());

    auto listed = off_divisor_points();
    std::sort(listed.begin(), listed.end());
    report.six_matches_listed =
        std::equal(report.six_orbit.begin(), report.six_orbit.end(),
                   listed.begin(), listed.end());
    return report;
}

}  // namespace epwv::abelian
