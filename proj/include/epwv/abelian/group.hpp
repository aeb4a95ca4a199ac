#pragma once
// Closures of the standard generator sets: the order-32 group G generated by
// T_0..T_4, its order-64 extension (G,i), the order-7680 subgroup generated
// by N5 and N01, and the full order-46080 unitary group U(H).  The closures
// are computed once and cached for the orbit, stabilizer and census scans.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "epwv/abelian/gaussian_matrix.hpp"
#include "epwv/abelian/generators.hpp"

namespace epwv::abelian {

struct GroupTables {
    std::vector<GiMat> g;       // <T0..T4>
    std::vector<GiMat> gi;      // <T0..T4, iI>
    std::vector<GiMat> ng;      // <N5, N01>
    std::vector<GiMat> uh;      // <N5, N01, N45>
    std::vector<GiMat> uh012;   // <N01, N45, Nf>, the stabilizer of q012
};

inline const GroupTables& group_tables() {
    static const GroupTables tables = [] {
        const auto& s = standard_generators();
        GroupTables t;
        t.g = group_closure({s.T.begin(), s.T.end()});
        std::vector<GiMat> with_i(s.T.begin(), s.T.end());
        with_i.push_back(s.iI());
        t.gi = group_closure(with_i);
        t.ng = group_closure({s.N5, s.N01});
        t.uh = group_closure({s.N5, s.N01, s.N45});
        t.uh012 = group_closure({s.N01, s.N45, s.Nf});
        return t;
    }();
    return tables;
}

struct GroupOrderReport {
    std::size_t g_order = 0;      // 32
    std::size_t gi_order = 0;     // 64
    std::size_t ng_order = 0;     // 7680
    std::size_t uh_order = 0;     // 46080
    bool nf_in_uh = false;
    bool e5_invariant_under_g = false;  // g E5 g^t == E5 for every g in G

    bool pass() const {
        return g_order == 32 && gi_order == 64 && ng_order == 7680 &&
               uh_order == 46080 && nf_in_uh && e5_invariant_under_g;
    }
};

inline GroupOrderReport group_orders() {
    const auto& s = standard_generators();
    const auto& t = group_tables();
    GroupOrderReport r;
    r.g_order = t.g.size();
    r.gi_order = t.gi.size();
    r.ng_order = t.ng.size();
    r.uh_order = t.uh.size();
    r.nf_in_uh = std::binary_search(t.uh.begin(), t.uh.end(), s.Nf);
    r.e5_invariant_under_g = std::all_of(
        t.g.begin(), t.g.end(),
        [&](const GiMat& g) { return g * s.E5 * g.transpose() == s.E5; });
    return r;
}

}  // namespace epwv::abelian
