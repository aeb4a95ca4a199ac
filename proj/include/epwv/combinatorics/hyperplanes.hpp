#pragma once
// The two one-parameter families of 16 coordinate-symmetric hyperplanes in
// P^5.  A family-1 set is { sum x_i = 0 } together with the 15 hyperplanes
// x_i + x_j + t*(x_0+...+x_5) = 0; a family-2 set is the 10 hyperplanes
// x_i + x_j + x_k - (1/2)(x_0+...+x_5) = 0 (normalized so the triple
// contains 0) together with the 6 hyperplanes x_i + t*(x_0+...+x_5) = 0.
//
// The classification step shows these are the only possibilities: a
// hyperplane whose coefficient vector takes at most two values is determined
// up to scalar by the subset of elevated slots up to complementation, the
// symmetric-group orbits of those classes have lengths 1, 6, 15 and 10, and
// the only ways to assemble an invariant 16-element union are 1+15 and 6+10.

#include <array>
#include <set>
#include <string>
#include <vector>

#include "epwv/exact/gaussian.hpp"
#include "epwv/exact/perm.hpp"

namespace epwv::combinatorics {

using exact::Gq;

struct TwoValueHyperplane {
    std::string name;        // "H", "H3", "H14", "H025"
    std::vector<Gq> coeffs;  // 6 coefficients of sum coeffs[i] * x_i = 0
};

// The 16 hyperplane forms of the given family at parameter t, in a fixed
// deterministic order (family 1: H then H_ij lexicographic; family 2: H_ijk
// lexicographic then H_0..H_5).
inline std::vector<TwoValueHyperplane> family_hyperplanes(int family,
                                                          const Gq& t) {
    if (family != 1 && family != 2)
        throw std::invalid_argument("family_hyperplanes: family must be 1 or 2");
    std::vector<TwoValueHyperplane> out;
    if (family == 1) {
        out.push_back({"H", std::vector<Gq>(6, Gq(1))});
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                std::vector<Gq> v(6, t);
                v[i] += Gq(1);
                v[j] += Gq(1);
                out.push_back({"H" + std::to_string(i) + std::to_string(j),
                               std::move(v)});
            }
    } else {
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                for (int k = j + 1; k < 6; ++k) {
                    if (i != 0) continue;  // representative triple contains 0
                    std::vector<Gq> v(6, Gq(-1, 2));
                    v[i] += Gq(1);
                    v[j] += Gq(1);
                    v[k] += Gq(1);
                    out.push_back({"H" + std::to_string(i) +
                                       std::to_string(j) + std::to_string(k),
                                   std::move(v)});
                }
        for (int i = 0; i < 6; ++i) {
            std::vector<Gq> v(6, t);
            v[i] += Gq(1);
            out.push_back({"H" + std::to_string(i), std::move(v)});
        }
    }
    return out;
}

struct OrbitClassificationReport {
    std::vector<std::size_t> orbit_lengths;  // sorted: {1, 6, 10, 15}
    // subsets of distinct orbit lengths whose sum is 16, sorted
    std::vector<std::vector<std::size_t>> sixteen_sums;  // {{1,15},{6,10}}

    bool pass() const {
        return orbit_lengths == std::vector<std::size_t>{1, 6, 10, 15} &&
               sixteen_sums ==
                   std::vector<std::vector<std::size_t>>{{1, 15}, {6, 10}};
    }
};

// Classify the hyperplanes with at most two coefficient values up to scalar:
// each is determined by its elevated subset S of {0..5} modulo S <-> S^c
// (negating the form swaps the two values).  Compute the orbit lengths of
// those classes under coordinate permutations and enumerate which unions of
// whole orbits have 16 elements.
inline OrbitClassificationReport classify_invariant_hyperplane_sets() {
    OrbitClassificationReport rep;

    auto canon_class = [](unsigned mask) {
        unsigned comp = (~mask) & 0x3fu;
        return std::min(mask, comp);
    };
    std::set<unsigned> classes;
    for (unsigned mask = 0; mask < 64; ++mask) classes.insert(canon_class(mask));

    const auto perms = exact::all_permutations<6>();
    std::set<unsigned> seen;
    std::vector<std::size_t> lengths;
    for (unsigned cls : classes) {
        if (seen.count(cls)) continue;
        std::set<unsigned> orbit;
        for (const auto& g : perms) {
            unsigned img = 0;
            for (int b = 0; b < 6; ++b)
                if (cls & (1u << b)) img |= 1u << g(b);
            orbit.insert(canon_class(img));
        }
        for (unsigned x : orbit) seen.insert(x);
        lengths.push_back(orbit.size());
    }
    std::sort(lengths.begin(), lengths.end());
    rep.orbit_lengths = lengths;

    const std::size_t n = lengths.size();
    for (unsigned pick = 1; pick < (1u << n); ++pick) {
        std::size_t sum = 0;
        std::vector<std::size_t> combo;
        for (std::size_t k = 0; k < n; ++k)
            if (pick & (1u << k)) {
                sum += lengths[k];
                combo.push_back(lengths[k]);
            }
        if (sum == 16) rep.sixteen_sums.push_back(combo);
    }
    std::sort(rep.sixteen_sums.begin(), rep.sixteen_sums.end());
    return rep;
}

}  // namespace epwv::combinatorics
