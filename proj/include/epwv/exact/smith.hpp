#pragma once
// Smith normal form of integer matrices with unimodular transforms:
// left * A * right is diagonal, nonnegative, with each nonzero entry dividing
// the next. Exact over arbitrary-precision integers.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "epwv/exact/matrix.hpp"

namespace epwv::exact {

using ZMatrix = Matrix<mpz_class>;

struct SmithDecomposition {
    std::vector<mpz_class> diag;  // length min(rows, cols), nonnegative
    ZMatrix left;                 // rows x rows, det +-1
    ZMatrix right;                // cols x cols, det +-1
};

namespace detail {

inline void swap_rows(ZMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
inline void swap_cols(ZMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
inline void add_row(ZMatrix& m, std::size_t dst, std::size_t src,
                    const mpz_class& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}
inline void add_col(ZMatrix& m, std::size_t dst, std::size_t src,
                    const mpz_class& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}
inline void negate_row(ZMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(ZMatrix a) {
    using namespace detail;
    const std::size_t R = a.rows(), C = a.cols();
    ZMatrix left = ZMatrix::identity(R), right = ZMatrix::identity(C);
    const std::size_t n = std::min(R, C);

    for (std::size_t k = 0; k < n; ++k) {
        // find a nonzero pivot of minimal absolute value in the trailing block
        std::size_t pr = k, pc = k;
        bool found = false;
        mpz_class best;
        for (std::size_t r = k; r < R; ++r)
            for (std::size_t c = k; c < C; ++c) {
                if (a(r, c) == 0) continue;
                mpz_class v = abs(a(r, c));
                if (!found || v < best) {
                    best = v;
                    pr = r;
                    pc = c;
                    found = true;
                }
            }
        if (!found) break;
        if (pr != k) { swap_rows(a, k, pr); swap_rows(left, k, pr); }
        if (pc != k) { swap_cols(a, k, pc); swap_cols(right, k, pc); }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = k + 1; r < R; ++r) {
                if (a(r, k) == 0) continue;
                mpz_class q = a(r, k) / a(k, k);  // truncated division
                add_row(a, r, k, -q);
                add_row(left, r, k, -q);
                if (a(r, k) != 0) {
                    swap_rows(a, k, r);
                    swap_rows(left, k, r);
                    clean = false;
                }
            }
            for (std::size_t c = k + 1; c < C; ++c) {
                if (a(k, c) == 0) continue;
                mpz_class q = a(k, c) / a(k, k);
                add_col(a, c, k, -q);
                add_col(right, c, k, -q);
                if (a(k, c) != 0) {
                    swap_cols(a, k, c);
                    swap_cols(right, k, c);
                    clean = false;
                }
            }
            // ensure divisibility of the remaining block by the pivot
            if (clean) {
                for (std::size_t r = k + 1; r < R && clean; ++r)
                    for (std::size_t c = k + 1; c < C && clean; ++c)
                        if (a(r, c) % a(k, k) != 0) {
                            add_row(a, k, r, 1);
                            add_row(left, k, r, 1);
                            clean = false;
                        }
            }
        }
        if (a(k, k) < 0) { negate_row(a, k); negate_row(left, k); }
    }

    SmithDecomposition out;
    out.diag.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.diag.push_back(a(k, k));
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

// Verifies left*original*right == diag and the divisibility chain.
inline bool smith_is_valid(const ZMatrix& original,
                           const SmithDecomposition& s) {
    ZMatrix prod = s.left * original * s.right;
    const std::size_t n = s.diag.size();
    for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c) {
            mpz_class want = (r == c && r < n) ? s.diag[r] : mpz_class(0);
            if (prod(r, c) != want) return false;
        }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (s.diag[k] < 0) return false;
        if (s.diag[k] != 0 && s.diag[k + 1] % s.diag[k] != 0) return false;
        if (s.diag[k] == 0 && s.diag[k + 1] != 0) return false;
    }
    mpz_class dl = matrix_det(s.left), dr = matrix_det(s.right);
    return (dl == 1 || dl == -1) && (dr == 1 || dr == -1);
}

// Product of the nonzero elementary divisors (1 for the zero matrix); counts
// components of fixed loci in the torus applications.
inline mpz_class nonzero_divisor_product(const SmithDecomposition& s) {
    mpz_class p = 1;
    for (const auto& d : s.diag)
        if (d != 0) p *= d;
    return p;
}

// Exact count of integer vectors v with v^T gram v == target, for a positive
// definite symmetric integer Gram matrix. Naive box enumeration bounded by
// the inverse Gram diagonal; adequate at rank 8, small norms.
inline long count_vectors_of_norm(const ZMatrix& gram, long target) {
    const std::size_t n = gram.rows();
    if (n != gram.cols())
        throw std::invalid_argument("count_vectors_of_norm: non-square");
    Matrix<Gq> g(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (gram(r, c) != gram(c, r))
                throw std::invalid_argument("count_vectors_of_norm: not symmetric");
            g(r, c) = Gq(mpq_class(gram(r, c)));
        }
    if (!is_positive_definite_hermitian(g))
        throw std::invalid_argument("count_vectors_of_norm: not positive definite");
    Matrix<Gq> inv = matrix_inverse(g);
    // |v_i| <= sqrt(target * inv_ii)
    std::vector<long> bound(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpq_class b = mpq_class(target) * inv(i, i).re();
        // smallest integer B with B^2 >= b
        long B = 0;
        while (mpq_class(B) * B < b) ++B;
        bound[i] = B;
    }
    long count = 0;
    std::vector<long> v(n, 0);
    // recursive enumeration with partial quadratic form value
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            mpz_class q = 0;
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c)
                    q += gram(r, c) * v[r] * v[c];
            if (q == target) ++count;
            return;
        }
        for (long x = -bound[i]; x <= bound[i]; ++x) {
            v[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace epwv::exact
