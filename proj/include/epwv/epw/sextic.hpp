#pragma once
// The canonical symmetric sextic pair and the geometry of its singular
// locus: restriction of polynomials to planes, containment of the 60
// labeled planes in the singular locus, and their orbit decompositions
// under the full symmetric group and the twisted S5.

#include <map>
#include <set>
#include <vector>

#include "epwv/exterior/lagrangian.hpp"
#include "epwv/exterior/planes_catalog.hpp"
#include "epwv/multipoly/symmetric.hpp"

namespace epwv::epw {

using exact::Gq;
using exact::Matrix;
using exact::Perm;
using multipoly::Poly;

struct CanonicalSextic {
    Poly f6 = multipoly::f6();
    Poly f6_dual = multipoly::f6_dual();
};

// Restrict an arity-6 polynomial to the span of the rows of a 3x6 matrix:
// x_j := sum_k t_k * rows(k, j), a polynomial in three parameters t0,t1,t2.
inline Poly restrict_to_plane(const Poly& p, const Matrix<Gq>& rows) {
    std::vector<Poly> images;
    for (int j = 0; j < 6; ++j) {
        Poly img(3);
        for (int k = 0; k < 3; ++k)
            img += Poly::variable(3, k).scaled(rows(k, j));
        images.push_back(img);
    }
    return p.subst(images);
}

// True when f and all six partials vanish identically on the plane.
inline bool plane_in_singular_locus(const Poly& f, const exterior::Plane& pl) {
    if (!restrict_to_plane(f, pl.basis()).is_zero()) return false;
    for (int i = 0; i < 6; ++i)
        if (!restrict_to_plane(f.diff(i), pl.basis()).is_zero()) return false;
    return true;
}

// Coordinate permutation acting on planes: x_j -> x_{p(j)} on the ambient
// coordinates, i.e. basis columns are pulled back through p.
inline exterior::Plane act_on_plane(const Perm<6>& p,
                                    const exterior::Plane& pl) {
    Matrix<Gq> m(3, 6);
    for (std::size_t r = 0; r < 3; ++r)
        for (int c = 0; c < 6; ++c) m(r, c) = pl.basis()(r, p(c));
    return exterior::Plane(std::move(m));
}

// Orbit sizes (sorted ascending) of a set of planes under the group
// generated by `gens`.
inline std::vector<std::size_t> plane_orbit_sizes(
    const std::vector<exterior::Plane>& planes,
    const std::vector<Perm<6>>& gens) {
    std::set<exterior::Plane> pending(planes.begin(), planes.end());
    std::vector<std::size_t> sizes;
    while (!pending.empty()) {
        std::set<exterior::Plane> orbit{*pending.begin()};
        std::vector<exterior::Plane> frontier{*pending.begin()};
        while (!frontier.empty()) {
            std::vector<exterior::Plane> next;
            for (const auto& pl : frontier)
                for (const auto& g : gens) {
                    auto img = act_on_plane(g, pl);
                    if (orbit.insert(img).second) next.push_back(img);
                }
            frontier = std::move(next);
        }
        sizes.push_back(orbit.size());
        for (const auto& pl : orbit) pending.erase(pl);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

inline std::vector<Perm<6>> s6_generators() {
    Perm<6> t = Perm<6>::transposition(0, 1);
    Perm<6> c;
    for (int k = 0; k < 6; ++k) c.map[k] = (k + 1) % 6;
    return {t, c};
}

struct SingularPlanesReport {
    bool all_contained = false;
    bool control_plane_rejected = false;
    std::vector<std::size_t> s6_orbit_sizes;
    std::vector<std::size_t> beta_orbit_sizes;

    bool pass() const {
        return all_contained && control_plane_rejected &&
               s6_orbit_sizes == std::vector<std::size_t>{15, 45} &&
               beta_orbit_sizes == std::vector<std::size_t>{5, 10, 15, 30};
    }
};

// The 60 labeled planes lie in the singular locus of the sextic; their
// orbit sizes are {15,45} under S6 and {5,10,15,30} under the twisted S5.
inline SingularPlanesReport singular_planes_check(const CanonicalSextic& s) {
    SingularPlanesReport rep;
    auto p60 = exterior::singular_planes_60();
    rep.all_contained = true;
    std::vector<exterior::Plane> planes;
    for (const auto& lp : p60) {
        planes.push_back(lp.plane);
        if (!plane_in_singular_locus(s.f6, lp.plane))
            rep.all_contained = false;
    }
    rep.control_plane_rejected =
        !restrict_to_plane(s.f6, exterior::Plane::coordinate(0, 1, 2).basis())
             .is_zero();
    rep.s6_orbit_sizes = plane_orbit_sizes(planes, s6_generators());
    rep.beta_orbit_sizes =
        plane_orbit_sizes(planes, exterior::beta_generators());
    return rep;
}

}  // namespace epwv::epw
