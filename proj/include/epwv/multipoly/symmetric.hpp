#pragma once
// Symmetric polynomial toolbox: monomial symmetric basis for partitions of 6,
// the canonical sextics F6 and F6dual, and power-sum/elementary conversions
// (Newton identities) used to evaluate symmetric functions of six arguments.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "epwv/multipoly/polynomial.hpp"

namespace epwv::multipoly {

// The 11 partitions of 6 in canonical order.
inline const std::vector<std::vector<int>>& partitions_of_6() {
    static const std::vector<std::vector<int>> parts = {
        {6},          {5, 1},       {4, 2},    {4, 1, 1},       {3, 3},
        {3, 2, 1},    {3, 1, 1, 1}, {2, 2, 2}, {2, 2, 1, 1},
        {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    return parts;
}

// Monomial symmetric polynomial: sum of all distinct monomials whose exponent
// multiset equals the partition, in `arity` variables.
inline Poly monomial_symmetric(int arity, const std::vector<int>& partition) {
    std::vector<int> exps(partition);
    exps.resize(arity, 0);
    std::sort(exps.begin(), exps.end());
    Poly p(arity);
    do {
        Mono m;
        for (int v = 0; v < arity; ++v) m = m.with_exp(v, exps[v]);
        p.add_term(m, Gq(1));
    } while (std::next_permutation(exps.begin(), exps.end()));
    return p;
}

// The 11-element monomial symmetric basis of degree-6 symmetric sextics.
inline std::vector<Poly> symmetric_monomial_basis() {
    std::vector<Poly> out;
    for (const auto& part : partitions_of_6())
        out.push_back(monomial_symmetric(6, part));
    return out;
}

// F6 = P6 - P42 + 2 P222 - 16 P111111 (57 terms).
inline Poly f6() {
    Poly p = monomial_symmetric(6, {6});
    p -= monomial_symmetric(6, {4, 2});
    p += monomial_symmetric(6, {2, 2, 2}).scaled(Gq(2));
    p -= monomial_symmetric(6, {1, 1, 1, 1, 1, 1}).scaled(Gq(16));
    return p;
}

// F6dual differs from F6 only in the sign of the P111111 coefficient.
inline Poly f6_dual() {
    Poly p = monomial_symmetric(6, {6});
    p -= monomial_symmetric(6, {4, 2});
    p += monomial_symmetric(6, {2, 2, 2}).scaled(Gq(2));
    p += monomial_symmetric(6, {1, 1, 1, 1, 1, 1}).scaled(Gq(16));
    return p;
}

// Elementary symmetric e_1..e_max of the given ring elements, via Newton's
// identities from the power sums. Works for any arguments in a commutative
// Gq-algebra R represented concretely; here specialized to Poly.
//
//   e_k = (1/k) * sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j
inline std::vector<Poly> elementary_from_power_sums(
    const std::vector<Poly>& power_sums) {
    const int n = static_cast<int>(power_sums.size());
    const int arity = power_sums.empty() ? 0 : power_sums[0].arity();
    std::vector<Poly> e;
    e.push_back(Poly::constant(arity, Gq(1)));  // e_0
    for (int k = 1; k <= n; ++k) {
        Poly acc(arity);
        for (int j = 1; j <= k; ++j) {
            Poly term = e[k - j] * power_sums[j - 1];
            if (j % 2 == 0) acc -= term;
            else acc += term;
        }
        e.push_back(acc.scaled(Gq(1, k)));
    }
    return e;
}

}  // namespace epwv::multipoly
