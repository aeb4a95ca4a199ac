#pragma once
// 4x4 matrices over the Gaussian integers Z[i]: exact 64-bit arithmetic,
// conjugate transposes, adjugate inverses for unit-determinant matrices,
// breadth-first group closure, canonical representatives modulo unit
// scalars, and realification to 8x8 integer matrices (row convention).

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "epwv/exact/gaussian.hpp"
#include "epwv/exact/matrix.hpp"
#include "epwv/exact/smith.hpp"

namespace epwv::abelian {

// One Gaussian integer re + im*i.
struct Gi {
    std::int64_t re = 0;
    std::int64_t im = 0;

    friend Gi operator+(Gi a, Gi b) { return {a.re + b.re, a.im + b.im}; }
    friend Gi operator-(Gi a, Gi b) { return {a.re - b.re, a.im - b.im}; }
    friend Gi operator*(Gi a, Gi b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    Gi operator-() const { return {-re, -im}; }
    Gi conj() const { return {re, -im}; }
    std::int64_t norm() const { return re * re + im * im; }
    bool is_unit() const { return norm() == 1; }

    friend bool operator==(const Gi&, const Gi&) = default;
    friend auto operator<=>(const Gi&, const Gi&) = default;
};

// Dense 4x4 matrix over Z[i]; totally ordered entrywise so that closures can
// live in ordered sets.
struct GiMat {
    std::array<Gi, 16> e{};

    Gi& at(std::size_t r, std::size_t c) { return e[4 * r + c]; }
    const Gi& at(std::size_t r, std::size_t c) const { return e[4 * r + c]; }

    static GiMat identity() {
        GiMat m;
        for (std::size_t k = 0; k < 4; ++k) m.at(k, k) = Gi{1, 0};
        return m;
    }

    friend GiMat operator*(const GiMat& a, const GiMat& b) {
        GiMat p;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t k = 0; k < 4; ++k) {
                const Gi& x = a.at(r, k);
                if (x == Gi{}) continue;
                for (std::size_t c = 0; c < 4; ++c)
                    p.at(r, c) = p.at(r, c) + x * b.at(k, c);
            }
        return p;
    }

    friend GiMat operator+(const GiMat& a, const GiMat& b) {
        GiMat s;
        for (std::size_t k = 0; k < 16; ++k) s.e[k] = a.e[k] + b.e[k];
        return s;
    }

    friend GiMat operator-(const GiMat& a, const GiMat& b) {
        GiMat s;
        for (std::size_t k = 0; k < 16; ++k) s.e[k] = a.e[k] - b.e[k];
        return s;
    }

    GiMat operator-() const {
        GiMat s;
        for (std::size_t k = 0; k < 16; ++k) s.e[k] = -e[k];
        return s;
    }

    GiMat scaled(Gi s) const {
        GiMat m;
        for (std::size_t k = 0; k < 16; ++k) m.e[k] = s * e[k];
        return m;
    }

    GiMat transpose() const {
        GiMat t;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    GiMat conj_transpose() const {
        GiMat t;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) t.at(c, r) = at(r, c).conj();
        return t;
    }

    friend bool operator==(const GiMat&, const GiMat&) = default;
    friend auto operator<=>(const GiMat&, const GiMat&) = default;
};

// Parses one Gaussian integer written as a sum of signed terms, e.g. "0",
// "-2", "i", "-i", "2i", "1+i", "-1-i".
inline Gi parse_gaussian_integer(const std::string& token) {
    Gi out{};
    std::size_t p = 0;
    auto skip_space = [&] {
        while (p < token.size() && std::isspace(static_cast<unsigned char>(token[p]))) ++p;
    };
    skip_space();
    bool seen_term = false;
    while (p < token.size()) {
        std::int64_t sign = 1;
        while (p < token.size() && (token[p] == '+' || token[p] == '-')) {
            if (token[p] == '-') sign = -sign;
            ++p;
            skip_space();
        }
        bool have_digits = false;
        std::int64_t value = 0;
        while (p < token.size() && std::isdigit(static_cast<unsigned char>(token[p]))) {
            value = 10 * value + (token[p] - '0');
            have_digits = true;
            ++p;
        }
        if (p < token.size() && token[p] == 'i') {
            out.im += sign * (have_digits ? value : 1);
            ++p;
        } else {
            if (!have_digits)
                throw std::invalid_argument("parse_gaussian_integer: bad token '" +
                                            token + "'");
            out.re += sign * value;
        }
        seen_term = true;
        skip_space();
    }
    if (!seen_term)
        throw std::invalid_argument("parse_gaussian_integer: empty token");
    return out;
}

// Builds a 4x4 matrix from a compact literal: entries separated by commas,
// rows by semicolons, e.g. "1, 0, 0, 0; 0, -1, 0, 0; 0, -1+i, 1, 0; 1-i, 0, 0, -1".
inline GiMat gi_matrix(const std::string& text) {
    GiMat m;
    std::size_t row = 0, col = 0, start = 0;
    auto flush = [&](std::size_t end) {
        if (row >= 4 || col >= 4)
            throw std::invalid_argument("gi_matrix: too many entries");
        m.at(row, col) = parse_gaussian_integer(text.substr(start, end - start));
        ++col;
    };
    for (std::size_t p = 0; p < text.size(); ++p) {
        if (text[p] == ',') {
            flush(p);
            start = p + 1;
        } else if (text[p] == ';') {
            flush(p);
            if (col != 4)
                throw std::invalid_argument("gi_matrix: row is not 4 entries long");
            ++row;
            col = 0;
            start = p + 1;
        }
    }
    flush(text.size());
    if (row != 3 || col != 4)
        throw std::invalid_argument("gi_matrix: expected 4 rows of 4 entries");
    return m;
}

namespace detail {

inline Gi gi_det3(const GiMat& m, std::array<std::size_t, 3> rs,
                  std::array<std::size_t, 3> cs) {
    Gi acc{};
    acc = acc + m.at(rs[0], cs[0]) * (m.at(rs[1], cs[1]) * m.at(rs[2], cs[2]) -
                                      m.at(rs[1], cs[2]) * m.at(rs[2], cs[1]));
    acc = acc - m.at(rs[0], cs[1]) * (m.at(rs[1], cs[0]) * m.at(rs[2], cs[2]) -
                                      m.at(rs[1], cs[2]) * m.at(rs[2], cs[0]));
    acc = acc + m.at(rs[0], cs[2]) * (m.at(rs[1], cs[0]) * m.at(rs[2], cs[1]) -
                                      m.at(rs[1], cs[1]) * m.at(rs[2], cs[0]));
    return acc;
}

inline std::array<std::size_t, 3> others(std::size_t k) {
    std::array<std::size_t, 3> o{};
    std::size_t w = 0;
    for (std::size_t j = 0; j < 4; ++j)
        if (j != k) o[w++] = j;
    return o;
}

}  // namespace detail

inline Gi gi_det(const GiMat& m) {
    Gi acc{};
    for (std::size_t c = 0; c < 4; ++c) {
        if (m.at(0, c) == Gi{}) continue;
        Gi cof = detail::gi_det3(m, {1, 2, 3}, detail::others(c));
        Gi term = m.at(0, c) * cof;
        acc = (c % 2) ? acc - term : acc + term;
    }
    return acc;
}

// Inverse of a matrix whose determinant is a unit of Z[i] (otherwise the
// inverse is not integral and this throws).
inline GiMat gi_inverse(const GiMat& m) {
    Gi d = gi_det(m);
    if (!d.is_unit())
        throw std::invalid_argument("gi_inverse: determinant is not a unit");
    GiMat adj;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            Gi cof = detail::gi_det3(m, detail::others(c), detail::others(r));
            adj.at(r, c) = ((r + c) % 2) ? -cof : cof;
        }
    // For a unit d, 1/d equals conj(d).
    return adj.scaled(d.conj());
}

// Least of M, iM, -M, -iM in the entrywise order; canonical representative of
// the class of M modulo unit scalars.
inline GiMat canon_unit(const GiMat& m) {
    GiMat best = m;
    GiMat cur = m;
    for (int k = 0; k < 3; ++k) {
        cur = cur.scaled(Gi{0, 1});
        if (cur < best) best = cur;
    }
    return best;
}

// Breadth-first closure of the semigroup generated by the given matrices.
// For unit-determinant generators of a finite group this is the group itself.
// Throws when the closure exceeds the cap.
inline std::vector<GiMat> group_closure(const std::vector<GiMat>& generators,
                                        std::size_t cap = 1'000'000) {
    for (const auto& g : generators)
        if (!gi_det(g).is_unit())
            throw std::invalid_argument(
                "group_closure: generator determinant is not a unit");
    std::set<GiMat> seen;
    std::vector<GiMat> frontier;
    seen.insert(GiMat::identity());
    frontier.push_back(GiMat::identity());
    while (!frontier.empty()) {
        std::vector<GiMat> next;
        for (const auto& x : frontier)
            for (const auto& g : generators) {
                GiMat y = x * g;
                if (seen.insert(y).second) {
                    if (seen.size() > cap)
                        throw std::runtime_error("group_closure: cap exceeded");
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// The matrix with entries promoted to Gaussian rationals.
inline exact::Matrix<exact::Gq> to_rational(const GiMat& m) {
    exact::Matrix<exact::Gq> out(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            out(r, c) = exact::Gq(mpq_class(static_cast<long>(m.at(r, c).re)),
                                  mpq_class(static_cast<long>(m.at(r, c).im)));
    return out;
}

// Rank of the matrix over the field Q(i).
inline std::size_t gi_rank(const GiMat& m) {
    return exact::matrix_rank(to_rational(m));
}

// Realification as an 8x8 integer matrix acting on row vectors: the complex
// coordinate z_j = x_j + i y_j maps to the coordinate pair (x_j, y_j), so each
// entry a+bi of the complex matrix becomes the 2x2 block [[a, b], [-b, a]].
inline exact::ZMatrix realify(const GiMat& m) {
    exact::ZMatrix out(8, 8);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            const Gi& z = m.at(r, c);
            out(2 * r, 2 * c) = z.re;
            out(2 * r, 2 * c + 1) = z.im;
            out(2 * r + 1, 2 * c) = -z.im;
            out(2 * r + 1, 2 * c + 1) = z.re;
        }
    return out;
}

}  // namespace epwv::abelian
