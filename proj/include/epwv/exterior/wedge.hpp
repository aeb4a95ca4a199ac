#pragma once
// Exterior algebra on C^6 in fixed coordinates: grade-3 and grade-4 wedge
// vectors over the Gaussian rationals, Plucker coordinates of 3-spaces,
// the symplectic pairing on grade 3, and decomposability relations.
//
// Basis conventions (fixed once, used everywhere):
//   - grade-3 basis: the 20 3-subsets of {0..5} sorted ascending, listed in
//     lexicographic order;
//   - grade-4 basis: the 15 4-subsets, same ordering rule;
//   - the volume form e0^e1^e2^e3^e4^e5 is identified with 1.

#include <array>
#include <cstdint>
#include <vector>

#include "epwv/exact/gaussian.hpp"
#include "epwv/exact/matrix.hpp"

namespace epwv::exterior {

using exact::Gq;
using exact::Matrix;

using Wedge3 = std::array<Gq, 20>;  // coords in the grade-3 basis
using Wedge4 = std::array<Gq, 15>;  // coords in the grade-4 basis

inline const std::array<std::array<int, 3>, 20>& subsets3() {
    static const auto s = [] {
        std::array<std::array<int, 3>, 20> out{};
        int k = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) out[k++] = {a, b, c};
        return out;
    }();
    return s;
}

inline const std::array<std::array<int, 4>, 15>& subsets4() {
    static const auto s = [] {
        std::array<std::array<int, 4>, 15> out{};
        int k = 0;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c)
                    for (int d = c + 1; d < 6; ++d) out[k++] = {a, b, c, d};
        return out;
    }();
    return s;
}

inline int index3(int a, int b, int c) {
    const auto& s = subsets3();
    for (int k = 0; k < 20; ++k)
        if (s[k][0] == a && s[k][1] == b && s[k][2] == c) return k;
    return -1;
}

inline int index4(int a, int b, int c, int d) {
    const auto& s = subsets4();
    for (int k = 0; k < 15; ++k)
        if (s[k][0] == a && s[k][1] == b && s[k][2] == c && s[k][3] == d)
            return k;
    return -1;
}

// Sorts the index sequence in place and returns the sign of the sorting
// permutation, or 0 when an index repeats.
template <std::size_t N>
int sort_sign(std::array<int, N>& idx) {
    int sign = 1;
    for (std::size_t i = 0; i + 1 < N; ++i)
        for (std::size_t j = 0; j + 1 < N - i; ++j) {
            if (idx[j] == idx[j + 1]) return 0;
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
        }
    return sign;
}

// Wedge of the three rows of a 3x6 matrix: coordinate on {a,b,c} is the
// minor on columns (a,b,c).
inline Wedge3 plucker_of_rows(const Matrix<Gq>& rows) {
    Wedge3 w{};
    const auto& s3 = subsets3();
    for (int k = 0; k < 20; ++k) {
        const auto& s = s3[k];
        Matrix<Gq> minor(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) minor(r, c) = rows(r, s[c]);
        w[k] = matrix_det(minor);
    }
    return w;
}

// Coefficient of the volume form in a ^ b.
inline Gq symplectic_pairing(const Wedge3& a, const Wedge3& b) {
    Gq acc(0);
    const auto& s3 = subsets3();
    for (int k = 0; k < 20; ++k) {
        if (a[k].is_zero()) continue;
        const auto& s = s3[k];
        // complement of s in {0..5}, ascending
        std::array<int, 3> comp{};
        int t = 0;
        for (int v = 0; v < 6; ++v)
            if (v != s[0] && v != s[1] && v != s[2]) comp[t++] = v;
        int kc = index3(comp[0], comp[1], comp[2]);
        if (b[kc].is_zero()) continue;
        // sign of the shuffle (s, comp) as a permutation of (0..5)
        std::array<int, 6> shuffle = {s[0], s[1], s[2],
                                      comp[0], comp[1], comp[2]};
        int sgn = sort_sign(shuffle);
        acc += Gq(sgn) * a[k] * b[kc];
    }
    return acc;
}

// e_i ^ w for w of grade 3.
inline Wedge4 wedge_e(int i, const Wedge3& w) {
    Wedge4 out{};
    const auto& s3 = subsets3();
    for (int k = 0; k < 20; ++k) {
        if (w[k].is_zero()) continue;
        std::array<int, 4> idx = {i, s3[k][0], s3[k][1], s3[k][2]};
        int sgn = sort_sign(idx);
        if (sgn == 0) continue;
        out[index4(idx[0], idx[1], idx[2], idx[3])] += Gq(sgn) * w[k];
    }
    return out;
}

inline Wedge3 w3_add(const Wedge3& a, const Wedge3& b) {
    Wedge3 out;
    for (int k = 0; k < 20; ++k) out[k] = a[k] + b[k];
    return out;
}

inline Wedge3 w3_scaled(const Wedge3& a, const Gq& c) {
    Wedge3 out;
    for (int k = 0; k < 20; ++k) out[k] = a[k] * c;
    return out;
}

inline bool w3_is_zero(const Wedge3& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

// Coordinate of an arbitrary (possibly unsorted) index triple, with sign.
inline Gq w3_coord(const Wedge3& w, int a, int b, int c) {
    std::array<int, 3> idx = {a, b, c};
    int sgn = sort_sign(idx);
    if (sgn == 0) return Gq(0);
    return Gq(sgn) * w[index3(idx[0], idx[1], idx[2])];
}

// Grassmann-Plucker quadratic relations for Gr(3,6): for every 2-subset
// {a1,a2} and 4-subset {b1<b2<b3<b4},
//   sum_j (-1)^j p(a1,a2,bj) p(b \ bj) = 0.
// All hold iff the vector is decomposable (or zero).
inline bool plucker_relations_hold(const Wedge3& w) {
    const auto& s4 = subsets4();
    for (int a1 = 0; a1 < 6; ++a1)
        for (int a2 = a1 + 1; a2 < 6; ++a2)
            for (const auto& b : s4) {
                Gq acc(0);
                for (int j = 0; j < 4; ++j) {
                    std::array<int, 3> rest{};
                    int t = 0;
                    for (int k = 0; k < 4; ++k)
                        if (k != j) rest[t++] = b[k];
                    Gq term = w3_coord(w, a1, a2, b[j]) *
                              w3_coord(w, rest[0], rest[1], rest[2]);
                    if (j % 2) acc -= term;
                    else acc += term;
                }
                if (!acc.is_zero()) return false;
            }
    return true;
}

}  // namespace epwv::exterior
