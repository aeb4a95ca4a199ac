#pragma once
// The Petersen graph on the 2-subsets of a 5-element set (edges join disjoint
// subsets) labeled by pair-partitions of {0..5}: each vertex carries the
// partition that is the cycle type of the image of its transposition under
// the outer-twisted embedding of S5 into S6, and each edge carries the unique
// pair shared by its endpoints' partitions.  Four seed vertices determine the
// entire labeling; the five partitions left over are exactly the matching
// partitions supporting the incident 20-plane family.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epwv/exact/perm.hpp"
#include "epwv/exterior/lagrangian.hpp"
#include "epwv/exterior/planes_catalog.hpp"

namespace epwv::combinatorics {

using exact::Perm;
using exterior::PairTriple;

struct PetersenLabeling {
    std::vector<std::array<int, 2>> vertices;         // 10 2-subsets of {0..4}
    std::vector<std::array<int, 2>> edges;            // 15 vertex-index pairs
    std::vector<PairTriple> vertex_partition;         // one per vertex
    std::vector<std::array<int, 2>> edge_label;       // shared pair per edge
};

struct PetersenReport {
    std::size_t solutions = 0;  // labelings extending the four seeds: 1
    PetersenLabeling labeling;
    bool vertex_partitions_distinct = false;  // 10 distinct partitions
    bool remaining_are_matching = false;      // leftover 5 == matching set
    bool matches_reference = false;           // equals the published figure
    bool edge_labels_distinct = false;        // all 15 pairs of {0..5}
    bool matching_labels_disjoint_edges = false;  // 3 disjoint edges each
    std::size_t homomorphism_order = 0;       // 120
    bool homomorphism_consistent = false;     // certified multiplicativity
    bool transposition_partitions = false;    // cycle types match vertices

    bool pass() const {
        return solutions == 1 && vertex_partitions_distinct &&
               remaining_are_matching && matches_reference &&
               edge_labels_distinct && matching_labels_disjoint_edges &&
               homomorphism_order == 120 && homomorphism_consistent &&
               transposition_partitions;
    }
};

namespace detail {

inline PairTriple make_partition(int a0, int b0, int a1, int b1, int a2,
                                 int b2) {
    return PairTriple{std::pair{a0, b0}, std::pair{a1, b1}, std::pair{a2, b2}};
}

// The published labeling: vertex {i,j} of the letter set -> pair-partition.
inline const std::map<std::array<int, 2>, PairTriple>& reference_labeling() {
    static const std::map<std::array<int, 2>, PairTriple> fig = {
        {{0, 1}, make_partition(0, 3, 1, 4, 2, 5)},
        {{0, 2}, make_partition(0, 2, 1, 5, 3, 4)},
        {{0, 3}, make_partition(0, 4, 1, 2, 3, 5)},
        {{0, 4}, make_partition(0, 5, 1, 3, 2, 4)},
        {{1, 2}, make_partition(0, 1, 2, 4, 3, 5)},
        {{1, 3}, make_partition(0, 2, 1, 3, 4, 5)},
        {{1, 4}, make_partition(0, 4, 1, 5, 2, 3)},
        {{2, 3}, make_partition(0, 5, 1, 4, 2, 3)},
        {{2, 4}, make_partition(0, 3, 1, 2, 4, 5)},
        {{3, 4}, make_partition(0, 1, 2, 5, 3, 4)}};
    return fig;
}

inline std::size_t shared_pairs(const PairTriple& p, const PairTriple& q) {
    std::size_t n = 0;
    for (const auto& a : p)
        for (const auto& b : q)
            if (a == b) ++n;
    return n;
}

}  // namespace detail

inline PetersenReport petersen_labeling() {
    PetersenReport rep;
    auto& lab = rep.labeling;

    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) lab.vertices.push_back({i, j});
    const std::size_t nv = lab.vertices.size();
    std::vector<std::vector<std::size_t>> adjacent(nv);
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t v = u + 1; v < nv; ++v) {
            const auto& a = lab.vertices[u];
            const auto& b = lab.vertices[v];
            const bool disjoint = a[0] != b[0] && a[0] != b[1] &&
                                  a[1] != b[0] && a[1] != b[1];
            if (!disjoint) continue;
            lab.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
            adjacent[u].push_back(v);
            adjacent[v].push_back(u);
        }

    // the four seeds: partitions of the adjacent-transposition vertices
    std::map<std::array<int, 2>, PairTriple> seeds = {
        {{0, 1}, detail::make_partition(0, 3, 1, 4, 2, 5)},
        {{1, 2}, detail::make_partition(0, 1, 2, 4, 3, 5)},
        {{2, 3}, detail::make_partition(0, 5, 1, 4, 2, 3)},
        {{3, 4}, detail::make_partition(0, 1, 2, 5, 3, 4)}};

    std::vector<PairTriple> all_partitions = exterior::partitions6();

    std::vector<int> assign(nv, -1);  // index into all_partitions
    std::vector<std::size_t> unknown;
    auto part_index = [&](const PairTriple& p) {
        for (std::size_t k = 0; k < all_partitions.size(); ++k)
            if (all_partitions[k] == p) return static_cast<int>(k);
        throw std::logic_error("petersen: seed partition not canonical");
    };
    for (std::size_t v = 0; v < nv; ++v) {
        auto it = seeds.find(lab.vertices[v]);
        if (it != seeds.end()) assign[v] = part_index(it->second);
        else unknown.push_back(v);
    }

    std::vector<std::vector<PairTriple>> found;
    auto consistent = [&](std::size_t v) {
        for (std::size_t u : adjacent[v]) {
            if (assign[u] < 0) continue;
            if (assign[u] == assign[v]) return false;
            if (detail::shared_pairs(all_partitions[assign[u]],
                                     all_partitions[assign[v]]) != 1)
                return false;
        }
        return true;
    };
    auto full_check = [&] {
        for (std::size_t v = 0; v < nv; ++v) {
            std::set<std::array<int, 2>> labels;
            for (std::size_t u : adjacent[v])
                for (const auto& a : all_partitions[assign[v]])
                    for (const auto& b : all_partitions[assign[u]])
                        if (a == b) labels.insert({a.first, a.second});
            if (labels.size() != 3) return false;
        }
        return true;
    };
    std::vector<bool> used(all_partitions.size(), false);
    for (int a : assign)
        if (a >= 0) used[a] = true;
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == unknown.size()) {
            if (!full_check()) return;
            std::vector<PairTriple> sol;
            for (std::size_t v = 0; v < nv; ++v)
                sol.push_back(all_partitions[assign[v]]);
            found.push_back(std::move(sol));
            return;
        }
        const std::size_t v = unknown[i];
        for (std::size_t k = 0; k < all_partitions.size(); ++k) {
            if (used[k]) continue;
            assign[v] = static_cast<int>(k);
            used[k] = true;
            if (consistent(v)) self(self, i + 1);
            used[k] = false;
            assign[v] = -1;
        }
    };
    dfs(dfs, 0);
    rep.solutions = found.size();
    if (found.size() != 1) return rep;
    lab.vertex_partition = found.front();

    std::set<PairTriple> used_parts(lab.vertex_partition.begin(),
                                    lab.vertex_partition.end());
    rep.vertex_partitions_distinct = used_parts.size() == nv;

    std::set<PairTriple> remaining;
    for (const auto& p : all_partitions)
        if (!used_parts.count(p)) remaining.insert(p);
    const std::set<PairTriple> matching(exterior::matching_partitions().begin(),
                                        exterior::matching_partitions().end());
    rep.remaining_are_matching = (remaining == matching);

    rep.matches_reference = true;
    for (std::size_t v = 0; v < nv; ++v) {
        auto it = detail::reference_labeling().find(lab.vertices[v]);
        if (it == detail::reference_labeling().end() ||
            it->second != lab.vertex_partition[v])
            rep.matches_reference = false;
    }

    std::set<std::array<int, 2>> edge_labels;
    for (const auto& e : lab.edges) {
        std::array<int, 2> shared{-1, -1};
        for (const auto& a : lab.vertex_partition[e[0]])
            for (const auto& b : lab.vertex_partition[e[1]])
                if (a == b) shared = {a.first, a.second};
        lab.edge_label.push_back(shared);
        edge_labels.insert(shared);
    }
    rep.edge_labels_distinct =
        edge_labels.size() == lab.edges.size() && !edge_labels.count({-1, -1});

    rep.matching_labels_disjoint_edges = true;
    for (const auto& part : matching) {
        std::vector<std::size_t> hits;
        for (std::size_t e = 0; e < lab.edges.size(); ++e)
            for (const auto& pr : part)
                if (lab.edge_label[e] ==
                    std::array<int, 2>{pr.first, pr.second})
                    hits.push_back(e);
        if (hits.size() != 3) rep.matching_labels_disjoint_edges = false;
        for (std::size_t x = 0; x < hits.size(); ++x)
            for (std::size_t y = x + 1; y < hits.size(); ++y) {
                const auto& e1 = lab.edges[hits[x]];
                const auto& e2 = lab.edges[hits[y]];
                if (e1[0] == e2[0] || e1[0] == e2[1] || e1[1] == e2[0] ||
                    e1[1] == e2[1])
                    rep.matching_labels_disjoint_edges = false;
            }
    }

    // the twisted embedding: images of the adjacent transpositions generate;
    // build the full map by closure and certify multiplicativity
    const auto& images = exterior::beta_generators();
    std::vector<Perm<5>> gens5;
    for (int k = 0; k < 4; ++k)
        gens5.push_back(Perm<5>::transposition(k, k + 1));
    std::map<Perm<5>, Perm<6>> hom;
    hom.emplace(Perm<5>(), Perm<6>());
    std::vector<Perm<5>> frontier{Perm<5>()};
    while (!frontier.empty()) {
        std::vector<Perm<5>> next;
        for (const auto& s : frontier)
            for (int k = 0; k < 4; ++k) {
                const Perm<5> t = s.then(gens5[k]);  // gens5[k] o s
                if (hom.emplace(t, hom[s].then(images[k])).second)
                    next.push_back(t);
            }
        frontier = std::move(next);
    }
    rep.homomorphism_order = hom.size();
    rep.homomorphism_consistent = true;
    for (const auto& [s, img] : hom)
        for (int k = 0; k < 4; ++k)
            if (hom.at(s.then(gens5[k])) != img.then(images[k]))
                rep.homomorphism_consistent = false;

    rep.transposition_partitions = true;
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& [i, j] = std::pair{lab.vertices[v][0], lab.vertices[v][1]};
        const Perm<6> img = hom.at(Perm<5>::transposition(i, j));
        std::vector<std::pair<int, int>> cycle_pairs;
        for (int x = 0; x < 6; ++x)
            if (img(x) > x) cycle_pairs.emplace_back(x, img(x));
        if (cycle_pairs.size() != 3 ||
            detail::make_partition(cycle_pairs[0].first, cycle_pairs[0].second,
                                   cycle_pairs[1].first, cycle_pairs[1].second,
                                   cycle_pairs[2].first,
                                   cycle_pairs[2].second) !=
                lab.vertex_partition[v])
            rep.transposition_partitions = false;
    }
    return rep;
}

}  // namespace epwv::combinatorics
