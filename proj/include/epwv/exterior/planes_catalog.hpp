#pragma once
// The labeled plane families V_{i±j, k±l, m±n}: a plane label is a perfect
// matching of {0..5} into three pairs together with a sign per pair. The
// label means the plane cut out by Z_i ± Z_j = Z_k ± Z_l = Z_m ± Z_n = 0,
// so sign '+' on pair (i,j) contributes the basis row e_i - e_j and '-'
// contributes e_i + e_j.
//
// Catalog:
//   - 15 perfect matchings ("partitions") of {0..5};
//   - per partition, the 4 sign classes with an odd number of '-' signs;
//   - 60 = 15 x 4 singular planes; 20 = 5 x 4 incident planes supported on
//     the five distinguished partitions.

#include <array>
#include <string>
#include <vector>

#include "epwv/exterior/plane.hpp"

namespace epwv::exterior {

using PairTriple = std::array<std::pair<int, int>, 3>;

// All 15 perfect matchings of {0..5} into pairs, each pair (i,j) with i<j,
// pairs sorted by first element; enumeration order is deterministic.
inline const std::vector<PairTriple>& partitions6() {
    static const auto parts = [] {
        std::vector<PairTriple> out;
        // pair 0 with b, then the least remaining with d, rest forced
        for (int b = 1; b < 6; ++b) {
            std::array<int, 4> rest{};
            int t = 0;
            for (int v = 1; v < 6; ++v)
                if (v != b) rest[t++] = v;
            for (int k = 1; k < 4; ++k) {
                std::array<int, 2> last{};
                int u = 0;
                for (int j = 1; j < 4; ++j)
                    if (j != k) last[u++] = rest[j];
                out.push_back(PairTriple{std::pair{0, b},
                                         std::pair{rest[0], rest[k]},
                                         std::pair{last[0], last[1]}});
            }
        }
        return out;
    }();
    return parts;
}

// The five partitions supporting the complete incident family.
inline const std::vector<PairTriple>& matching_partitions() {
    static const std::vector<PairTriple> m = {
        PairTriple{std::pair{0, 1}, std::pair{2, 3}, std::pair{4, 5}},
        PairTriple{std::pair{0, 2}, std::pair{1, 4}, std::pair{3, 5}},
        PairTriple{std::pair{0, 3}, std::pair{1, 5}, std::pair{2, 4}},
        PairTriple{std::pair{0, 4}, std::pair{1, 3}, std::pair{2, 5}},
        PairTriple{std::pair{0, 5}, std::pair{1, 2}, std::pair{3, 4}}};
    return m;
}

// Sign classes with an odd number of '-' entries, deterministic order.
inline const std::array<std::array<int, 3>, 4>& odd_sign_classes() {
    static const std::array<std::array<int, 3>, 4> s = {
        std::array<int, 3>{1, 1, -1}, std::array<int, 3>{1, -1, 1},
        std::array<int, 3>{-1, 1, 1}, std::array<int, 3>{-1, -1, -1}};
    return s;
}

struct LabeledPlane {
    PairTriple pairs;
    std::array<int, 3> signs;  // +1 for '+', -1 for '-'
    Plane plane;

    std::string label() const {
        std::string s;
        for (int k = 0; k < 3; ++k) {
            if (k) s += ',';
            s += std::to_string(pairs[k].first);
            s += (signs[k] > 0 ? '+' : '-');
            s += std::to_string(pairs[k].second);
        }
        return s;
    }
};

inline Plane plane_from_label(const PairTriple& pairs,
                              const std::array<int, 3>& signs) {
    Matrix<Gq> rows(3, 6);
    for (int k = 0; k < 3; ++k) {
        rows(k, pairs[k].first) = Gq(1);
        rows(k, pairs[k].second) = Gq(-signs[k]);
    }
    return Plane(std::move(rows));
}

inline std::vector<LabeledPlane> planes_for_partitions(
    const std::vector<PairTriple>& parts) {
    std::vector<LabeledPlane> out;
    for (const auto& part : parts)
        for (const auto& signs : odd_sign_classes())
            out.push_back(
                LabeledPlane{part, signs, plane_from_label(part, signs)});
    return out;
}

// The 20 pairwise-incident planes (5 partitions x 4 odd sign classes).
inline std::vector<LabeledPlane> incident_planes_20() {
    return planes_for_partitions(matching_partitions());
}

// All 60 planes of the singular locus (15 partitions x 4 odd sign classes).
inline std::vector<LabeledPlane> singular_planes_60() {
    return planes_for_partitions(partitions6());
}

// Parse "0+1,2-3,4+5" into a labeled plane.
inline LabeledPlane plane_from_string(const std::string& s) {
    PairTriple pairs{};
    std::array<int, 3> signs{};
    int k = 0;
    for (std::size_t pos = 0; pos < s.size() && k < 3; pos += 4, ++k) {
        pairs[k] = {s[pos] - '0', s[pos + 2] - '0'};
        signs[k] = (s[pos + 1] == '+') ? 1 : -1;
    }
    return LabeledPlane{pairs, signs, plane_from_label(pairs, signs)};
}

}  // namespace epwv::exterior
