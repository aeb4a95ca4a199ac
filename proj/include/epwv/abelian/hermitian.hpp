#pragma once
// The G-invariant Hermitian form: exact solve of T X conj(T)^t = X over the
// five generating involutions (16 real unknowns), uniqueness of the solution
// up to scale, exhaustive unitarity of all 46080 elements of U(H), and the
// realization of the lattice Z[i]^4 with Re H as the E8 root lattice (even,
// unimodular, positive definite, 240 roots).

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "epwv/abelian/gaussian_matrix.hpp"
#include "epwv/abelian/generators.hpp"
#include "epwv/abelian/group.hpp"
#include "epwv/exact/gaussian.hpp"
#include "epwv/exact/matrix.hpp"
#include "epwv/exact/smith.hpp"

namespace epwv::abelian {

struct HermitianSolveReport {
    std::size_t unknowns = 0;       // 16
    std::size_t rank = 0;           // 15
    std::size_t nullity = 0;        // 1
    exact::Matrix<exact::Gq> solution;  // kernel vector rebuilt as a 4x4 matrix,
                                        // scaled so the (0,0) entry equals 2
    bool matches_standard = false;  // solution == H
    std::size_t unitary_checked = 0;    // 46080
    bool unitary_all = false;       // g H conj(g)^t == H for every g in U(H)

    bool pass() const {
        return unknowns == 16 && nullity == 1 && matches_standard &&
               unitary_checked == 46080 && unitary_all;
    }
};

namespace detail {

// Unknown layout for a Hermitian 4x4 matrix: real diagonal entries and the
// real and imaginary parts of the entries above the diagonal.
struct HermitianUnknowns {
    // index of Re X(j,k) for j <= k
    int re_index[4][4];
    // index of Im X(j,k) for j < k
    int im_index[4][4];
    int count = 0;

    HermitianUnknowns() {
        for (auto& row : re_index)
            for (auto& x : row) x = -1;
        for (auto& row : im_index)
            for (auto& x : row) x = -1;
        for (int j = 0; j < 4; ++j)
            for (int k = j; k < 4; ++k) {
                re_index[j][k] = count++;
                if (j != k) im_index[j][k] = count++;
            }
    }

    // Complex coefficient vector of the entry X(j,k) in terms of the unknowns.
    std::vector<exact::Gq> entry(int j, int k) const {
        std::vector<exact::Gq> v(count, exact::Gq(0));
        if (j <= k) {
            v[re_index[j][k]] = exact::Gq(1);
            if (j != k) v[im_index[j][k]] = exact::Gq::i();
        } else {
            v[re_index[k][j]] = exact::Gq(1);
            v[im_index[k][j]] = -exact::Gq::i();
        }
        return v;
    }
};

}  // namespace detail

inline HermitianSolveReport invariant_hermitian_space() {
    const auto& s = standard_generators();
    const detail::HermitianUnknowns u;
    HermitianSolveReport report;
    report.unknowns = static_cast<std::size_t>(u.count);

    // One complex constraint per generator and matrix entry:
    //   (T X conj(T)^t)(a,b) - X(a,b) = 0,
    // split into a real and an imaginary row over the rational unknowns.
    exact::Matrix<exact::Gq> rows(5 * 16 * 2, u.count);
    std::size_t next_row = 0;
    for (const auto& t : s.T) {
        const GiMat tc = t.conj_transpose();
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                std::vector<exact::Gq> acc(u.count, exact::Gq(0));
                for (int j = 0; j < 4; ++j)
                    for (int k = 0; k < 4; ++k) {
                        const Gi c = t.at(a, j) * tc.at(k, b);
                        if (c == Gi{}) continue;
                        const exact::Gq cq(mpq_class(static_cast<long>(c.re)),
                                           mpq_class(static_cast<long>(c.im)));
                        const auto ent = u.entry(j, k);
                        for (int w = 0; w < u.count; ++w)
                            if (ent[w] != exact::Gq(0)) acc[w] += cq * ent[w];
                    }
                const auto ent = u.entry(a, b);
                for (int w = 0; w < u.count; ++w) acc[w] -= ent[w];
                for (int w = 0; w < u.count; ++w) {
                    rows(next_row, w) = exact::Gq(acc[w].re());
                    rows(next_row + 1, w) = exact::Gq(acc[w].im());
                }
                next_row += 2;
            }
    }

    report.rank = exact::matrix_rank(rows);
    const auto kernel = exact::matrix_kernel(rows);
    report.nullity = kernel.size();

    if (kernel.size() == 1) {
        const auto& v = kernel.front();
        const exact::Gq pivot = v[u.re_index[0][0]];
        if (pivot != exact::Gq(0)) {
            const exact::Gq scale = exact::Gq(2) / pivot;
            exact::Matrix<exact::Gq> x(4, 4);
            for (int j = 0; j < 4; ++j)
                for (int k = j; k < 4; ++k) {
                    exact::Gq val = scale * v[u.re_index[j][k]];
                    if (j != k)
                        val += exact::Gq::i() * (scale * v[u.im_index[j][k]]);
                    x(j, k) = val;
                    if (j != k) x(k, j) = val.conj();
                }
            report.solution = x;
            report.matches_standard = (x == to_rational(s.H));
        }
    }

    const auto& uh = group_tables().uh;
    report.unitary_checked = uh.size();
    report.unitary_all = true;
    for (const auto& g : uh)
        if (g * s.H * g.conj_transpose() != s.H) {
            report.unitary_all = false;
            break;
        }
    return report;
}

struct E8Report {
    exact::ZMatrix gram;            // 8x8 over the real basis e_0, i e_0, ..., e_3, i e_3
    bool symmetric = false;
    bool diagonal_even = false;
    mpz_class determinant;          // 1
    std::vector<mpz_class> leading_minors;  // 2, 4, 8, 16, 8, 4, 2, 1
    bool positive_definite = false;
    long norm_two_vectors = 0;      // 240

    bool pass() const {
        return symmetric && diagonal_even && determinant == 1 &&
               positive_definite && norm_two_vectors == 240;
    }
};

// Gram matrix of the real quadratic form v -> Re h(v, v) on Z[i]^4 seen as
// Z^8, where h(u, v) = u H conj(v)^t.  For basis vectors the pairing blocks
// are [[Re H, Im H], [-Im H, Re H]], entry by entry.
inline E8Report e8_realization() {
    const auto& h = standard_generators().H;
    E8Report report;
    report.gram = exact::ZMatrix(8, 8);
    for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) {
            const Gi& z = h.at(j, k);
            report.gram(2 * j, 2 * k) = z.re;
            report.gram(2 * j, 2 * k + 1) = z.im;
            report.gram(2 * j + 1, 2 * k) = -z.im;
            report.gram(2 * j + 1, 2 * k + 1) = z.re;
        }

    report.symmetric = (report.gram == report.gram.transpose());
    report.diagonal_even = true;
    for (std::size_t k = 0; k < 8; ++k)
        if (report.gram(k, k) % 2 != 0) report.diagonal_even = false;

    report.positive_definite = true;
    for (std::size_t n = 1; n <= 8; ++n) {
        exact::ZMatrix lead(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) lead(r, c) = report.gram(r, c);
        mpz_class d = exact::matrix_det(lead);
        report.leading_minors.push_back(d);
        if (d <= 0) report.positive_definite = false;
    }
    report.determinant = report.leading_minors.back();

    if (report.positive_definite)
        report.norm_two_vectors = exact::count_vectors_of_norm(report.gram, 2);
    return report;
}

}  // namespace epwv::abelian
