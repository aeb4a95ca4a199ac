#pragma once
// Dense exact matrices over a field (primarily Gq) with fraction-free
// determinants, reduced row echelon form, rank, kernel and Hermitian tests.

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "epwv/exact/gaussian.hpp"

namespace epwv::exact {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, T(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        assert(e_.size() == rows_ * cols_);
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }

    const std::vector<T>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix p(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(r, k);
                if (a == T(0)) continue;
                for (std::size_t c = 0; c < o.cols_; ++c)
                    p(r, c) += a * o(k, c);
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix s = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] += o.e_[k];
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix s = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] -= o.e_[k];
        return s;
    }

    Matrix scaled(const T& s) const {
        Matrix m = *this;
        for (auto& x : m.e_) x *= s;
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

// In-place reduced row echelon form; returns (rank, pivot columns).
template <typename T>
std::pair<std::size_t, std::vector<std::size_t>> rref_in_place(Matrix<T>& m) {
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == T(0)) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t k = 0; k < m.cols(); ++k)
                std::swap(m(piv, k), m(r, k));
        T inv = T(1) / m(r, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == T(0)) continue;
            T f = m(i, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return {r, pivots};
}

template <typename T>
Matrix<T> rref(Matrix<T> m) {
    rref_in_place(m);
    return m;
}

template <typename T>
std::size_t matrix_rank(Matrix<T> m) {
    return rref_in_place(m).first;
}

// Basis of the right null space, one vector per free column.
template <typename T>
std::vector<std::vector<T>> matrix_kernel(Matrix<T> m) {
    auto [rank, pivots] = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[fc] = T(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Fraction-free (Bareiss) determinant. Exact over any field or integral
// domain with exact division.
template <typename T>
T matrix_det(Matrix<T> m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix_det: non-square input");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

// Naive cofactor-expansion determinant; cross-check oracle for small sizes.
template <typename T>
T matrix_det_cofactor(const Matrix<T>& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("matrix_det_cofactor: non-square input");
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n == 1) return m(0, 0);
    T acc(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == T(0)) continue;
        Matrix<T> sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == c) continue;
                sub(r - 1, cc++) = m(r, k);
            }
        }
        T term = m(0, c) * matrix_det_cofactor(sub);
        if (c % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

inline Matrix<Gq> conjugate_transpose(const Matrix<Gq>& m) {
    Matrix<Gq> t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c).conj();
    return t;
}

// Positive definiteness of a Hermitian matrix via leading principal minors
// (each must be a positive rational). Throws if the input is not Hermitian.
inline bool is_positive_definite_hermitian(const Matrix<Gq>& m) {
    if (m.rows() != m.cols() || !(conjugate_transpose(m) == m))
        throw std::invalid_argument(
            "is_positive_definite_hermitian: input is not Hermitian");
    for (std::size_t k = 1; k <= m.rows(); ++k) {
        Matrix<Gq> lead(k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) lead(r, c) = m(r, c);
        Gq d = matrix_det(lead);
        if (!d.is_real() || !(d.re() > 0)) return false;
    }
    return true;
}

// Inverse of a square matrix (throws when singular).
template <typename T>
Matrix<T> matrix_inverse(const Matrix<T>& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = T(1);
    }
    auto [rank, pivots] = rref_in_place(aug);
    // the left block must reduce to the identity: n pivots, all in columns < n
    if (rank < n || pivots[n - 1] >= n)
        throw std::invalid_argument("matrix_inverse: singular");
    Matrix<T> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

}  // namespace epwv::exact
