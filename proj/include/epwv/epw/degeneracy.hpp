#pragma once
// The degeneracy system of the canonical Lagrangian A: the six coefficient
// matrices M_i of the pencil map v -> (wedge by v restricted to A), pointwise
// coranks (= dim F_v intersect A), and the symbolic 10x10 minor determinant
// whose division by the sextic recovers the EPW equation.

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "epwv/exact/matrix.hpp"
#include "epwv/exterior/lagrangian.hpp"
#include "epwv/exterior/wedge.hpp"
#include "epwv/multipoly/symmetric.hpp"

namespace epwv::epw {

using exact::Gq;
using exact::Matrix;
using exterior::Wedge3;
using multipoly::Poly;

// Coefficient matrices for an arbitrary 10-vector family: M_i is 15x10 with
// column j the grade-4 coordinates of e_i wedge basis[j].
inline std::array<Matrix<Gq>, 6> degeneracy_matrices_for(
    const std::vector<Wedge3>& basis) {
    std::array<Matrix<Gq>, 6> ms;
    for (int i = 0; i < 6; ++i) {
        Matrix<Gq> m(15, basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto col = exterior::wedge_e(i, basis[j]);
            for (int r = 0; r < 15; ++r) m(r, j) = col[r];
        }
        ms[i] = std::move(m);
    }
    return ms;
}

// The canonical system, built from the canonical Lagrangian basis.
inline const std::array<Matrix<Gq>, 6>& degeneracy_matrices() {
    static const auto ms =
        degeneracy_matrices_for(exterior::canonical_lagrangian_basis());
    return ms;
}

inline Matrix<Gq> degeneracy_matrix_at(const std::vector<Gq>& v) {
    if (v.size() != 6) throw std::invalid_argument("point must have length 6");
    const auto& ms = degeneracy_matrices();
    Matrix<Gq> acc(15, 10);
    for (int i = 0; i < 6; ++i)
        if (!v[i].is_zero()) acc = acc + ms[i].scaled(v[i]);
    return acc;
}

// dim(F_v intersect A) = 10 - rank(M_v); throws on the zero vector.
inline std::size_t corank_at(const std::vector<Gq>& v) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("corank_at: zero vector");
    return 10 - exact::matrix_rank(degeneracy_matrix_at(v));
}

// Indices of the grade-4 basis subsets containing the given element; for a
// 10x10 minor these give ten rows whose determinant is nonzero.
inline std::vector<int> rows_containing(int element) {
    std::vector<int> rows;
    const auto& s4 = exterior::subsets4();
    for (int r = 0; r < 15; ++r)
        for (int x : s4[r])
            if (x == element) {
                rows.push_back(r);
                break;
            }
    return rows;
}

// Determinant of the square matrix of linear forms picked out by `rows`
// (one linear form per entry: sum_i v_i * M_i[r][c]). Expansion runs over
// rows with a dynamic program on the set of used columns; the sign of
// assigning column c at step k is (-1)^(k + #used columns below c).
inline Poly minor_determinant_for(const std::array<Matrix<Gq>, 6>& ms,
                                  const std::vector<int>& rows) {
    const std::size_t n = rows.size();
    if (n != ms[0].cols())
        throw std::invalid_argument("minor_determinant: selection not square");
    std::vector<std::vector<Poly>> lin(n, std::vector<Poly>(n, Poly(6)));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t c = 0; c < n; ++c)
            for (int i = 0; i < 6; ++i)
                lin[k][c] += Poly::variable(6, i).scaled(ms[i](rows[k], c));
    std::map<std::uint32_t, Poly> dp{{0u, Poly::constant(6, Gq(1))}};
    for (std::size_t k = 0; k < n; ++k) {
        std::map<std::uint32_t, Poly> next;
        for (const auto& [mask, acc] : dp) {
            for (std::size_t c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                if (lin[k][c].is_zero()) continue;
                Poly term = acc * lin[k][c];
                if ((k + std::popcount(mask & ((1u << c) - 1))) % 2)
                    term = -term;
                auto [it, fresh] = next.emplace(mask | (1u << c), term);
                if (!fresh) it->second += term;
            }
        }
        dp = std::move(next);
    }
    auto it = dp.find((1u << n) - 1);
    return it == dp.end() ? Poly(6) : it->second;
}

inline Poly minor_determinant(const std::vector<int>& rows) {
    return minor_determinant_for(degeneracy_matrices(), rows);
}

struct EpwFromMinor {
    Poly determinant;    // degree-10 minor determinant
    bool remainder_zero = false;
    Poly quotient;       // determinant / sextic when the remainder vanishes

    bool pass() const {
        return !determinant.is_zero() && remainder_zero &&
               quotient.degree() == 4;
    }
};

// Divides the minor determinant over the rows containing `element` by the
// canonical sextic (monic in variable 0).
inline EpwFromMinor epw_equation_from_minor(int element) {
    EpwFromMinor out;
    out.determinant = minor_determinant(rows_containing(element));
    auto dr = multipoly::divide_by_monic_in_variable(out.determinant,
                                                     multipoly::f6(), 0);
    out.remainder_zero = dr.remainder.is_zero();
    if (out.remainder_zero) out.quotient = std::move(dr.quotient);
    return out;
}

}  // namespace epwv::epw
