#pragma once
// Kernel-based recovery of the symmetric sextic singular along a plane
// family: restrict each of the 11 monomial symmetric sextics and its six
// partial derivatives to one chosen plane per type, extract coefficients
// monomial-wise, and take the kernel of the resulting linear system.  At
// t = -1/2 the kernel is one-dimensional and spanned by the canonical sextic
// (family 2) or its dual (family 1).
//
// Also: the reduction maps N^t = -(t+1) M6 + b(t) Id (b = 6t+2 for family 1,
// 6t+1 for family 2) carrying the 16-hyperplane set at parameter t to the
// one at a measured parameter t'; and the two degenerations, the perfect
// cube-square at t = -1/3 and the common point of all planes at t = -1/6.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "epwv/combinatorics/plane_family.hpp"
#include "epwv/multipoly/symmetric.hpp"

namespace epwv::combinatorics {

using multipoly::Poly;

struct SexticRecovery {
    int family = 0;
    Gq t;
    std::vector<std::vector<Gq>> kernel;  // basis vectors over the 11 coeffs
    std::size_t kernel_dimension = 0;
    std::vector<Gq> generator;  // normalized (first nonzero = 1) if dim == 1
    Poly generator_poly;        // arity 6; zero unless dim == 1
};

namespace detail {

// Substitution images realizing the restriction to a plane: x_i becomes the
// linear form sum_k basis(k, i) * u_k in three parameters.
inline std::vector<Poly> plane_parametrization(const exterior::Plane& plane) {
    std::vector<Poly> images;
    for (int i = 0; i < 6; ++i) {
        Poly img(3);
        for (int k = 0; k < 3; ++k) {
            const Gq& c = plane.basis()(k, i);
            if (!c.is_zero()) img += Poly::variable(3, k).scaled(c);
        }
        images.push_back(std::move(img));
    }
    return images;
}

}  // namespace detail

inline SexticRecovery recover_sextic(const PlaneFamilyInstance& inst) {
    SexticRecovery out;
    out.family = inst.family;
    out.t = inst.t;
    out.generator_poly = Poly(6);

    // first-discovered plane of each type, types in sorted order
    std::map<std::string, const FamilyPlane*> first_of_type;
    for (const auto& fp : inst.planes)
        first_of_type.emplace(fp.type, &fp);

    const auto basis = multipoly::symmetric_monomial_basis();
    std::vector<std::vector<Gq>> rows;
    for (const auto& [type, fp] : first_of_type) {
        const auto images = detail::plane_parametrization(fp->plane);
        for (int op = 0; op <= 6; ++op) {
            std::map<multipoly::Mono, std::vector<Gq>, multipoly::GradedLexDesc>
                by_monomial;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                const Poly restricted =
                    (op == 0 ? basis[j] : basis[j].diff(op - 1)).subst(images);
                for (const auto& [m, c] : restricted.terms()) {
                    auto& row = by_monomial[m];
                    row.resize(basis.size(), Gq(0));
                    row[j] = c;
                }
            }
            for (auto& [m, row] : by_monomial) {
                row.resize(basis.size(), Gq(0));
                rows.push_back(std::move(row));
            }
        }
    }

    Matrix<Gq> sys(rows.size(), basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c) sys(r, c) = rows[r][c];
    out.kernel = exact::matrix_kernel(sys);
    out.kernel_dimension = out.kernel.size();

    if (out.kernel_dimension == 1) {
        out.generator = out.kernel[0];
        for (const auto& x : out.generator)
            if (!x.is_zero()) {
                const Gq inv = Gq(1) / x;
                for (auto& y : out.generator) y *= inv;
                break;
            }
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!out.generator[j].is_zero())
                out.generator_poly += basis[j].scaled(out.generator[j]);
    }
    return out;
}

inline SexticRecovery recover_sextic(int family, const Gq& t) {
    return recover_sextic(build_family_planes(family, t));
}

// ---------------------------------------------------------------------------
// reduction maps
// ---------------------------------------------------------------------------

struct ReductionReport {
    int family = 0;
    Gq t;
    Gq determinant;            // det of N^t, equals (6a+b) b^5
    bool singular = false;     // the excluded-parameter error path
    Gq image_parameter;        // measured t' (valid when !singular)
    bool image_is_family = false;  // image set == the t' set of the family

    bool pass() const { return !singular && image_is_family; }
};

inline ReductionReport reduction_map_check(int family, const Gq& t) {
    if (family != 1 && family != 2)
        throw std::invalid_argument("reduction_map_check: family must be 1 or 2");
    ReductionReport rep;
    rep.family = family;
    rep.t = t;

    const Gq a = -(t + Gq(1));
    const Gq b = family == 1 ? Gq(6) * t + Gq(2) : Gq(6) * t + Gq(1);
    Matrix<Gq> n(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) n(r, c) = a + (r == c ? b : Gq(0));
    rep.determinant = exact::matrix_det(n);
    if (rep.determinant.is_zero()) {
        rep.singular = true;
        return rep;
    }

    auto normalize = [](std::vector<Gq> v) {
        for (const auto& x : v)
            if (!x.is_zero()) {
                const Gq inv = Gq(1) / x;
                for (auto& y : v) y *= inv;
                break;
            }
        return v;
    };

    const auto src = family_hyperplanes(family, t);
    std::vector<std::vector<Gq>> images;
    for (const auto& h : src) {
        std::vector<Gq> w(6, Gq(0));
        for (int r = 0; r < 6; ++r)
            for (int c = 0; c < 6; ++c) w[r] += n(r, c) * h.coeffs[c];
        images.push_back(std::move(w));
    }

    // Measure t' from a two-valued image whose elevated slots number 2
    // (family 1, images of H_ij) or 1 (family 2, images of H_i):
    // elevated = (t'+1)s and baseline = t's for some scalar s.
    const std::size_t minority = family == 1 ? 2 : 1;
    bool measured = false;
    for (const auto& w : images) {
        std::vector<std::pair<Gq, std::size_t>> vals;
        for (const auto& x : w) {
            bool found = false;
            for (auto& [v, cnt] : vals)
                if (v == x) {
                    ++cnt;
                    found = true;
                }
            if (!found) vals.emplace_back(x, 1);
        }
        if (vals.size() != 2) continue;
        if (std::min(vals[0].second, vals[1].second) != minority) continue;
        const Gq elevated =
            vals[0].second == minority ? vals[0].first : vals[1].first;
        const Gq baseline =
            vals[0].second == minority ? vals[1].first : vals[0].first;
        if (elevated == baseline) continue;
        rep.image_parameter = baseline / (elevated - baseline);
        measured = true;
        break;
    }
    if (!measured) return rep;

    std::set<std::vector<Gq>> image_set, target_set;
    for (const auto& w : images) image_set.insert(normalize(w));
    for (const auto& h : family_hyperplanes(family, rep.image_parameter))
        target_set.insert(normalize(h.coeffs));
    rep.image_is_family = (image_set == target_set);
    return rep;
}

// ---------------------------------------------------------------------------
// degenerations
// ---------------------------------------------------------------------------

struct DegenerationReport {
    // family 1 at t = -1/3: the recovered sextic is the square of a cubic
    std::size_t square_kernel_dimension = 0;  // 1
    bool generator_is_square = false;
    int root_degree = 0;  // 3

    // family 2 at t = -1/6: all planes pass through one point
    std::size_t degenerate_plane_count = 0;  // 80 (not 60!)
    std::size_t common_point_dimension = 0;  // 1
    std::vector<Gq> common_point;            // (1:1:1:1:1:1)

    // control at t = -1/2: neither degeneration
    bool control_not_square = false;
    std::size_t control_common_dimension = 0;  // 0

    bool pass() const {
        return square_kernel_dimension == 1 && generator_is_square &&
               root_degree == 3 && common_point_dimension == 1 &&
               common_point == std::vector<Gq>(6, Gq(1)) &&
               control_not_square && control_common_dimension == 0;
    }
};

namespace detail {

// A plane of the family is exactly the intersection of its four containing
// hyperplanes, so the locus common to every plane is the kernel of the 16
// stacked forms.
inline std::vector<std::vector<Gq>> sixteen_form_kernel(int family,
                                                        const Gq& t) {
    const auto hps = family_hyperplanes(family, t);
    Matrix<Gq> stack(16, 6);
    for (int r = 0; r < 16; ++r)
        for (int c = 0; c < 6; ++c) stack(r, c) = hps[r].coeffs[c];
    return exact::matrix_kernel(stack);
}

}  // namespace detail

inline DegenerationReport degenerate_sextics() {
    DegenerationReport rep;

    const auto rec = recover_sextic(1, Gq(-1, 3));
    rep.square_kernel_dimension = rec.kernel_dimension;
    if (rec.kernel_dimension == 1) {
        const auto sq = multipoly::perfect_square_root(rec.generator_poly);
        rep.generator_is_square = sq.has_value();
        if (sq) rep.root_degree = sq->root.degree();
    }

    const auto inst = build_family_planes(2, Gq(-1, 6));
    rep.degenerate_plane_count = inst.planes.size();
    auto kernel = detail::sixteen_form_kernel(2, Gq(-1, 6));
    rep.common_point_dimension = kernel.size();
    if (kernel.size() == 1) {
        rep.common_point = kernel[0];
        for (const auto& x : rep.common_point)
            if (!x.is_zero()) {
                const Gq inv = Gq(1) / x;
                for (auto& y : rep.common_point) y *= inv;
                break;
            }
    }

    const auto control = recover_sextic(1, Gq(-1, 2));
    rep.control_not_square =
        control.kernel_dimension == 1 &&
        !multipoly::perfect_square_root(control.generator_poly).has_value();
    rep.control_common_dimension =
        detail::sixteen_form_kernel(2, Gq(-1, 2)).size();
    return rep;
}

}  // namespace epwv::combinatorics
