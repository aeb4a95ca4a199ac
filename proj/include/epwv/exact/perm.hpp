#pragma once
// Small permutations on {0..N-1}: composition, sign, enumeration, and group
// closure. Used for the coordinate actions of the symmetric groups.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace epwv::exact {

template <int N>
struct Perm {
    std::array<int, N> map{};  // map[x] = image of x

    Perm() { std::iota(map.begin(), map.end(), 0); }
    explicit Perm(std::array<int, N> m) : map(m) {}

    static Perm transposition(int a, int b) {
        Perm p;
        std::swap(p.map[a], p.map[b]);
        return p;
    }

    int operator()(int x) const { return map[x]; }

    // (a.then(b))(x) = b(a(x))
    Perm then(const Perm& b) const {
        Perm r;
        for (int x = 0; x < N; ++x) r.map[x] = b.map[map[x]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        for (int x = 0; x < N; ++x) r.map[map[x]] = x;
        return r;
    }

    int sign() const {
        int s = 1;
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                if (map[i] > map[j]) s = -s;
        return s;
    }

    auto operator<=>(const Perm&) const = default;
};

template <int N>
std::vector<Perm<N>> all_permutations() {
    std::array<int, N> a;
    std::iota(a.begin(), a.end(), 0);
    std::vector<Perm<N>> out;
    do {
        out.push_back(Perm<N>(a));
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

template <int N>
std::set<Perm<N>> permutation_closure(const std::vector<Perm<N>>& gens) {
    std::set<Perm<N>> seen;
    std::vector<Perm<N>> frontier{Perm<N>()};
    seen.insert(Perm<N>());
    while (!frontier.empty()) {
        std::vector<Perm<N>> next;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                Perm<N> h = f.then(g);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
    }
    return seen;
}

}  // namespace epwv::exact
