#pragma once
// Projective planes in P^5 represented by the reduced row echelon basis of
// their underlying 3-space; incidence predicates and intersection bases.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "epwv/exact/matrix.hpp"
#include "epwv/exterior/wedge.hpp"

namespace epwv::exterior {

// Canonical representative: 3x6 matrix in reduced row echelon form. Two
// planes are equal iff their matrices are equal.
class Plane {
public:
    explicit Plane(Matrix<Gq> rows) : basis_(exact::rref(std::move(rows))) {
        if (basis_.rows() != 3 || basis_.cols() != 6)
            throw std::invalid_argument("Plane: basis must be 3x6");
        if (exact::matrix_rank(basis_) != 3)
            throw std::invalid_argument("Plane: basis rank must be 3");
    }

    static Plane from_rows(const std::vector<std::vector<Gq>>& rows) {
        Matrix<Gq> m(rows.size(), 6);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < 6; ++c) m(r, c) = rows[r][c];
        return Plane(std::move(m));
    }

    // Coordinate span: the plane spanned by e_a, e_b, e_c.
    static Plane coordinate(int a, int b, int c) {
        Matrix<Gq> m(3, 6);
        m(0, a) = Gq(1);
        m(1, b) = Gq(1);
        m(2, c) = Gq(1);
        return Plane(std::move(m));
    }

    const Matrix<Gq>& basis() const { return basis_; }

    Wedge3 plucker() const { return plucker_of_rows(basis_); }

    friend bool operator==(const Plane& a, const Plane& b) {
        return a.basis_ == b.basis_;
    }
    friend bool operator<(const Plane& a, const Plane& b) {
        const auto& x = a.basis_.entries();
        const auto& y = b.basis_.entries();
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == y[k]) continue;
            return x[k] < y[k];
        }
        return false;
    }

private:
    Matrix<Gq> basis_;
};

// Projective dimension of the intersection: 2 for equal planes, -1 when the
// underlying 3-spaces meet only in the origin.  dim = 5 - rank of the six
// stacked basis rows.
inline int plane_intersection_dimension(const Plane& a, const Plane& b) {
    Matrix<Gq> stack(6, 6);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c) {
            stack(r, c) = a.basis()(r, c);
            stack(3 + r, c) = b.basis()(r, c);
        }
    return 5 - static_cast<int>(exact::matrix_rank(stack));
}

// Basis of the intersection of the two underlying 3-spaces: solve
// x^T A = y^T B by taking the kernel of [A^T | -B^T].
inline std::vector<std::vector<Gq>> plane_intersection_basis(const Plane& a,
                                                             const Plane& b) {
    Matrix<Gq> sys(6, 6);
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 3; ++c) {
            sys(r, c) = a.basis()(c, r);
            sys(r, 3 + c) = -b.basis()(c, r);
        }
    std::vector<std::vector<Gq>> out;
    for (const auto& k : exact::matrix_kernel(sys)) {
        std::vector<Gq> v(6, Gq(0));
        for (std::size_t c = 0; c < 6; ++c)
            for (std::size_t j = 0; j < 3; ++j)
                v[c] += k[j] * a.basis()(j, c);
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || !x.is_zero();
        if (nonzero) out.push_back(std::move(v));
    }
    return out;
}

}  // namespace epwv::exterior
