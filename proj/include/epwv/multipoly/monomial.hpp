#pragma once
// Monomials for up to 8 variables, packed one exponent byte per variable with
// variable 0 in the most significant byte. Plain lexicographic comparison
// (variable 0 dominant) is then unsigned integer comparison; the canonical
// term order is graded lexicographic, total degree first.
//
// Precondition maintained by users: every individual exponent stays below 256
// and products never carry across bytes (total degrees in this project are
// at most 36).

#include <array>
#include <cassert>
#include <cstdint>
#include <initializer_list>

namespace epwv::multipoly {

struct Mono {
    std::uint64_t packed = 0;

    static Mono from_exponents(std::initializer_list<int> exps) {
        Mono m;
        int var = 0;
        for (int e : exps) m = m.with_exp(var++, e);
        return m;
    }

    int exp(int var) const {
        return static_cast<int>((packed >> (8 * (7 - var))) & 0xffu);
    }

    Mono with_exp(int var, int e) const {
        assert(0 <= e && e < 256);
        std::uint64_t mask = ~(std::uint64_t(0xff) << (8 * (7 - var)));
        Mono m;
        m.packed = (packed & mask) |
                   (static_cast<std::uint64_t>(e) << (8 * (7 - var)));
        return m;
    }

    int degree() const {
        std::uint64_t p = packed;
        int d = 0;
        for (int k = 0; k < 8; ++k) {
            d += static_cast<int>(p & 0xffu);
            p >>= 8;
        }
        return d;
    }

    Mono operator*(const Mono& o) const {
#ifndef NDEBUG
        for (int v = 0; v < 8; ++v) assert(exp(v) + o.exp(v) < 256);
#endif
        Mono m;
        m.packed = packed + o.packed;
        return m;
    }

    // Componentwise division; caller must ensure divisibility.
    Mono operator/(const Mono& o) const {
#ifndef NDEBUG
        for (int v = 0; v < 8; ++v) assert(exp(v) >= o.exp(v));
#endif
        Mono m;
        m.packed = packed - o.packed;
        return m;
    }

    bool divisible_by(const Mono& o) const {
        for (int v = 0; v < 8; ++v)
            if (exp(v) < o.exp(v)) return false;
        return true;
    }

    friend bool operator==(const Mono& a, const Mono& b) {
        return a.packed == b.packed;
    }
};

// Graded-lex descending: higher degree first, then lexicographically larger
// (variable 0 dominant) first. Map iteration visits the leading term first.
struct GradedLexDesc {
    bool operator()(const Mono& a, const Mono& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.packed > b.packed;
    }
};

}  // namespace epwv::multipoly
