#pragma once
// The (16,10) incidence configuration of the 16 invariant divisors D+p with
// the 16 G-fixed half-periods: the principal divisor carries the ten points
// off the listed six, translates carry their shifts, and the configuration
// satisfies the row/column counts, the pairwise intersection counts, and the
// triangular rank pattern certifying that the divisors span at least a
// 5-dimensional linear system.

#include <array>
#include <cstdint>

#include "epwv/abelian/torsion.hpp"

namespace epwv::abelian {

struct DivisorIncidence {
    std::array<std::uint8_t, 6> six{};    // points off the principal divisor
    std::array<std::uint8_t, 10> ten{};   // points on it
    // table[p][q]: the point q lies on the divisor D + p, i.e. q - p is one
    // of the ten points (subtraction is XOR on nibbles).
    std::array<std::array<bool, 16>, 16> table{};
};

inline DivisorIncidence divisor_incidence_table() {
    DivisorIncidence d;
    d.six = off_divisor_points();
    std::array<bool, 16> off{};
    for (const auto a : d.six) off[a] = true;
    std::size_t w = 0;
    for (std::uint8_t a = 0; a < 16; ++a)
        if (!off[a]) d.ten[w++] = a;
    for (int p = 0; p < 16; ++p)
        for (int q = 0; q < 16; ++q) d.table[p][q] = !off[p ^ q];
    return d;
}

struct IncidenceReport {
    DivisorIncidence incidence;
    bool row_sums_ten = false;       // each divisor carries 10 points
    bool col_sums_ten = false;       // each point lies on 10 divisors
    bool pair_common_six = false;    // distinct divisors share exactly 6 points
    bool pair_outside_two = false;   // and miss exactly 2 points jointly
    bool translation_equivariant = false;  // table[p^t][q^t] == table[p][q]
    bool span_diagonal_off = false;  // r_i not on D + q_i
    bool span_triangle_on = false;   // r_i on D + q_j whenever j < i
    bool span_first_row = false;     // r_1 on D + q_j for every j >= 2

    bool pass() const {
        return row_sums_ten && col_sums_ten && pair_common_six &&
               pair_outside_two && translation_equivariant &&
               span_diagonal_off && span_triangle_on && span_first_row;
    }
};

inline IncidenceReport divisor_point_incidence() {
    IncidenceReport report;
    report.incidence = divisor_incidence_table();
    const auto& table = report.incidence.table;

    report.row_sums_ten = report.col_sums_ten = true;
    for (int p = 0; p < 16; ++p) {
        int row = 0, col = 0;
        for (int q = 0; q < 16; ++q) {
            row += table[p][q];
            col += table[q][p];
        }
        if (row != 10) report.row_sums_ten = false;
        if (col != 10) report.col_sums_ten = false;
    }

    report.pair_common_six = report.pair_outside_two = true;
    for (int p = 0; p < 16; ++p)
        for (int q = p + 1; q < 16; ++q) {
            int common = 0, outside = 0;
            for (int x = 0; x < 16; ++x) {
                if (table[p][x] && table[q][x]) ++common;
                if (!table[p][x] && !table[q][x]) ++outside;
            }
            if (common != 6) report.pair_common_six = false;
            if (outside != 2) report.pair_outside_two = false;
        }

    report.translation_equivariant = true;
    for (int t = 0; t < 16; ++t)
        for (int p = 0; p < 16; ++p)
            for (int q = 0; q < 16; ++q)
                if (table[p ^ t][q ^ t] != table[p][q])
                    report.translation_equivariant = false;

    // Six base points and six probe points, in the standard p-basis, whose
    // incidence matrix has empty diagonal and full strict lower triangle:
    // a 5x5 unitriangular minor, so the divisors D + q_i span at least a
    // 5-dimensional subsystem.
    const std::array<std::uint8_t, 6> q = {0b0000, 0b0100, 0b1011,
                                           0b0001, 0b0110, 0b1111};
    const std::array<std::uint8_t, 6> r = {0b1000, 0b1110, 0b0011,
                                           0b1011, 0b0111, 0b1101};
    report.span_diagonal_off = true;
    report.span_triangle_on = true;
    report.span_first_row = true;
    for (int i = 0; i < 6; ++i) {
        if (table[q[i]][r[i]]) report.span_diagonal_off = false;
        for (int j = 0; j < i; ++j)
            if (!table[q[j]][r[i]]) report.span_triangle_on = false;
    }
    for (int j = 1; j < 6; ++j)
        if (!table[q[j]][r[0]]) report.span_first_row = false;
    return report;
}

}  // namespace epwv::abelian
