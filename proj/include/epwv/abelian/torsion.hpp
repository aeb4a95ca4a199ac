#pragma once
// Two-torsion points of the abelian fourfold E^4 = (C/Z[i])^4 encoded as
// vectors in F2^8 over the real lattice basis e_0, i e_0, ..., e_3, i e_3:
// the 16 points fixed by the whole group G, the isotropy census of all 256
// two-torsion points, and the 16 G-invariant semicharacters of the lattice
// modulo 2.

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "epwv/abelian/gaussian_matrix.hpp"
#include "epwv/abelian/generators.hpp"
#include "epwv/abelian/group.hpp"
#include "epwv/exact/smith.hpp"

namespace epwv::abelian {

// A half-period with every coordinate 0 or (1+i)/2, described by the nibble
// a (bit j = coordinate j), as a two-torsion vector in F2^8.
inline std::uint8_t half_point(std::uint8_t a) {
    std::uint8_t w = 0;
    for (int j = 0; j < 4; ++j)
        if (a & (1 << j)) w |= static_cast<std::uint8_t>(0b11 << (2 * j));
    return w;
}

// The six distinguished half-periods off the principal invariant divisor:
// p1, p3, p1+p3, p2, p4, p2+p4 in the standard basis (nibble bit j-1 is the
// coefficient of p_j).
inline std::array<std::uint8_t, 6> off_divisor_points() {
    return {0b0001, 0b0100, 0b0101, 0b0010, 0b1000, 0b1010};
}

namespace detail {

// Rows of realify(m) reduced mod 2, packed as bytes: acting on a two-torsion
// vector x is the XOR of the rows selected by the bits of x.
inline std::array<std::uint8_t, 8> mod2_rows(const GiMat& m) {
    const exact::ZMatrix b = realify(m);
    std::array<std::uint8_t, 8> rows{};
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c)
            if (b(r, c) % 2 != 0) rows[r] |= static_cast<std::uint8_t>(1 << c);
    return rows;
}

inline std::uint8_t act_mod2(const std::array<std::uint8_t, 8>& rows,
                             std::uint8_t x) {
    std::uint8_t y = 0;
    for (int r = 0; r < 8; ++r)
        if (x & (1 << r)) y ^= rows[r];
    return y;
}

}  // namespace detail

// Image of the two-torsion point x under the matrix m.
inline std::uint8_t act_two_torsion(const GiMat& m, std::uint8_t x) {
    return detail::act_mod2(detail::mod2_rows(m), x);
}

// Image of the half-period (1+i)/2 * a under the matrix m, again of that
// form: multiplying the row vector by m sends coordinate k to
// (1+i)/2 * sum_j a_j m(j,k), and (1+i)(u+iv)/2 is a half-period coordinate
// with bit (u+v) mod 2.
inline std::uint8_t act_half_point(const GiMat& m, std::uint8_t a) {
    std::uint8_t b = 0;
    for (int k = 0; k < 4; ++k) {
        std::int64_t acc = 0;
        for (int j = 0; j < 4; ++j)
            if (a & (1 << j)) acc += m.at(j, k).re + m.at(j, k).im;
        if (acc % 2 != 0) b |= static_cast<std::uint8_t>(1 << k);
    }
    return b;
}

struct FixedPointReport {
    std::vector<std::uint8_t> points;  // the G-fixed two-torsion vectors
    bool half_period_form = false;     // every coordinate is 0 or (1+i)/2
    bool equals_i_fixed = false;       // same set as the points fixed by i*I
    bool example_in = false;           // ((1+i)/2, 0, 0, 0) is fixed
    bool example_out = false;          // (1/2, 0, 0, 0) is not fixed

    bool pass() const {
        return points.size() == 16 && half_period_form && equals_i_fixed &&
               example_in && example_out;
    }
};

inline FixedPointReport g_fixed_points() {
    const auto& s = standard_generators();
    std::array<std::array<std::uint8_t, 8>, 5> t_rows;
    for (std::size_t j = 0; j < 5; ++j) t_rows[j] = detail::mod2_rows(s.T[j]);
    const auto i_rows = detail::mod2_rows(s.iI());

    FixedPointReport report;
    report.half_period_form = true;
    report.equals_i_fixed = true;
    std::vector<std::uint8_t> i_fixed;
    for (int x = 0; x < 256; ++x) {
        const auto w = static_cast<std::uint8_t>(x);
        bool fixed = true;
        for (const auto& rows : t_rows)
            if (detail::act_mod2(rows, w) != w) {
                fixed = false;
                break;
            }
        if (detail::act_mod2(i_rows, w) == w) i_fixed.push_back(w);
        if (!fixed) continue;
        report.points.push_back(w);
        for (int j = 0; j < 4; ++j) {
            const bool lo = w & (1 << (2 * j)), hi = w & (1 << (2 * j + 1));
            if (lo != hi) report.half_period_form = false;
        }
    }
    report.equals_i_fixed = (report.points == i_fixed);

    auto is_fixed = [&](std::uint8_t w) {
        for (const auto& rows : t_rows)
            if (detail::act_mod2(rows, w) != w) return false;
        return true;
    };
    report.example_in = is_fixed(half_point(0b0001));
    report.example_out = !is_fixed(0b00000001);  // coordinate 1/2 on e_0
    return report;
}

struct IsotropyReport {
    std::size_t full = 0;        // stabilizer all of G: 16 points
    std::size_t order_four = 0;  // stabilizer of order 4: 240 points
    std::size_t other = 0;       // anything else: none

    bool pass() const { return full == 16 && order_four == 240 && other == 0; }
};

inline IsotropyReport two_torsion_isotropy() {
    const auto& g = group_tables().g;
    std::vector<std::array<std::uint8_t, 8>> rows;
    rows.reserve(g.size());
    for (const auto& m : g) rows.push_back(detail::mod2_rows(m));

    IsotropyReport report;
    for (int x = 0; x < 256; ++x) {
        const auto w = static_cast<std::uint8_t>(x);
        std::size_t stab = 0;
        for (const auto& r : rows)
            if (detail::act_mod2(r, w) == w) ++stab;
        if (stab == g.size())
            ++report.full;
        else if (stab == 4)
            ++report.order_four;
        else
            ++report.other;
    }
    return report;
}

struct SemicharacterReport {
    exact::ZMatrix e_form;  // 8x8 integer matrix Im h(b_j, b_k)
    std::vector<std::array<int, 8>> survivors;  // invariant sign patterns
    bool paired_pattern = false;     // values (a1,a1,a2,a2,a3,a3,a4,a4)
    bool all_ones_survives = false;
    bool trivial_on_fixed = false;   // every survivor is 1 on the 16 fixed points
    bool basis_pairing_even = false; // e((1+i)e_j, (1+i)e_k) = +1 for all pairs
    bool cocycle_consistent = false; // alpha(x+y) = alpha(x) alpha(y) e(x,y)

    bool pass() const {
        return survivors.size() == 16 && paired_pattern && all_ones_survives &&
               trivial_on_fixed && basis_pairing_even && cocycle_consistent;
    }
};

// A semicharacter is determined by its signs on the 8 basis vectors; its
// value on x in F2^8 expands, in the fixed basis order, as
//   alpha(x) = prod_{j in x} vals_j * (-1)^{sum_{j<k in x} E(b_j, b_k)}.
inline SemicharacterReport invariant_semicharacters() {
    const auto& s = standard_generators();
    SemicharacterReport report;

    // Pairing h(b_u, b_v) with b_{2j} = e_j, b_{2j+1} = i e_j equals
    // i^s * conj(i^t) * H(j,k) for u = 2j+s, v = 2k+t.
    report.e_form = exact::ZMatrix(8, 8);
    std::array<std::array<std::int64_t, 8>, 8> emat{};
    const std::array<Gi, 2> unit = {Gi{1, 0}, Gi{0, 1}};
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            const Gi h = unit[u % 2] * s.H.at(u / 2, v / 2) * unit[v % 2].conj();
            emat[u][v] = h.im;
            report.e_form(u, v) = h.im;
        }

    // Parity of the ordered-pair sum over set bits, tabulated for all x.
    std::array<std::uint8_t, 8> e_odd{};
    for (int j = 0; j < 8; ++j)
        for (int k = j + 1; k < 8; ++k)
            if (emat[j][k] % 2 != 0) e_odd[j] |= static_cast<std::uint8_t>(1 << k);
    std::array<int, 256> pair_parity{};
    for (int x = 0; x < 256; ++x) {
        int p = 0;
        for (int j = 0; j < 8; ++j)
            if (x & (1 << j)) p ^= std::popcount(static_cast<unsigned>(x & e_odd[j])) & 1;
        pair_parity[x] = p;
    }
    auto alpha = [&](std::uint8_t neg, std::uint8_t x) {
        const int sign_flips = std::popcount(static_cast<unsigned>(x & neg)) & 1;
        return (sign_flips ^ pair_parity[x]) ? -1 : 1;
    };

    std::vector<std::array<std::uint8_t, 8>> gen_rows;
    for (const auto& t : s.T) gen_rows.push_back(detail::mod2_rows(t));
    gen_rows.push_back(detail::mod2_rows(s.iI()));

    report.paired_pattern = true;
    for (int neg = 0; neg < 256; ++neg) {
        bool invariant = true;
        for (const auto& rows : gen_rows) {
            for (int x = 0; x < 256 && invariant; ++x) {
                const auto w = static_cast<std::uint8_t>(x);
                if (alpha(neg, detail::act_mod2(rows, w)) != alpha(neg, w))
                    invariant = false;
            }
            if (!invariant) break;
        }
        if (!invariant) continue;
        std::array<int, 8> vals{};
        for (int j = 0; j < 8; ++j) vals[j] = (neg & (1 << j)) ? -1 : 1;
        for (int j = 0; j < 4; ++j)
            if (vals[2 * j] != vals[2 * j + 1]) report.paired_pattern = false;
        if (neg == 0) report.all_ones_survives = true;
        report.survivors.push_back(vals);
    }

    report.trivial_on_fixed = true;
    for (const auto& vals : report.survivors) {
        std::uint8_t neg = 0;
        for (int j = 0; j < 8; ++j)
            if (vals[j] < 0) neg |= static_cast<std::uint8_t>(1 << j);
        for (int a = 0; a < 16; ++a)
            if (alpha(neg, half_point(static_cast<std::uint8_t>(a))) != 1)
                report.trivial_on_fixed = false;
    }

    // e((1+i)e_j, (1+i)e_k) = (-1)^{Im((1+i)(1-i)H(j,k))} = (-1)^{Im(2H(j,k))}.
    report.basis_pairing_even = true;
    const Gi one_plus_i{1, 1};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            const Gi h = one_plus_i * s.H.at(j, k) * one_plus_i.conj();
            if (h.im % 2 != 0) report.basis_pairing_even = false;
        }

    // Cocycle identity for every survivor over all pairs in F2^8, with
    // e(x, y) = (-1)^{sum_{j,k} x_j y_k E(b_j, b_k)}.
    report.cocycle_consistent = true;
    std::array<std::uint8_t, 8> e_rows{};
    for (int j = 0; j < 8; ++j)
        for (int k = 0; k < 8; ++k)
            if (emat[j][k] % 2 != 0) e_rows[j] |= static_cast<std::uint8_t>(1 << k);
    for (const auto& vals : report.survivors) {
        std::uint8_t neg = 0;
        for (int j = 0; j < 8; ++j)
            if (vals[j] < 0) neg |= static_cast<std::uint8_t>(1 << j);
        for (int x = 0; x < 256 && report.cocycle_consistent; ++x)
            for (int y = 0; y < 256; ++y) {
                int bilinear = 0;
                for (int j = 0; j < 8; ++j)
                    if (x & (1 << j))
                        bilinear ^= std::popcount(static_cast<unsigned>(y & e_rows[j])) & 1;
                const int lhs = alpha(neg, static_cast<std::uint8_t>(x ^ y));
                const int rhs = alpha(neg, static_cast<std::uint8_t>(x)) *
                                alpha(neg, static_cast<std::uint8_t>(y)) *
                                (bilinear ? -1 : 1);
                if (lhs != rhs) {
                    report.cocycle_consistent = false;
                    break;
                }
            }
    }
    return report;
}

}  // namespace epwv::abelian
