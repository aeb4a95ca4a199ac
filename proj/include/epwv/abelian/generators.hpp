#pragma once
// The standard matrices behind the abelian-fourfold construction: the five
// involutions T_0..T_4 generating a group G of order 32 inside GL4(Z[i]), the
// unitary-group generators N5, N01, N45 and the extra element Nf, the
// invariant Hermitian Gram matrix H, the symplectic forms E5 and E4, and the
// two tangent-cone quadrics q012, q013.  The accessor validates every
// defining relation once and throws on any transcription error.

#include <array>
#include <stdexcept>
#include <string>

#include "epwv/abelian/gaussian_matrix.hpp"

namespace epwv::abelian {

struct StandardGenerators {
    GiMat H;                   // invariant Hermitian form (integer Gram over Z[i])
    GiMat T0, N5, N01, N45, Nf;
    GiMat E5, E4;              // symplectic forms; E4 = N45 E5 N45^t
    GiMat q012, q013;          // tangent-cone quadrics
    std::array<GiMat, 5> T;    // T_j = N5^j T0 N5^{-j}

    GiMat iI() const { return GiMat::identity().scaled(Gi{0, 1}); }
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("standard_generators: " + what);
}

inline bool unitary_for(const GiMat& m, const GiMat& h) {
    return m * h * m.conj_transpose() == h;
}

inline StandardGenerators build_standard_generators() {
    StandardGenerators s;
    s.H = gi_matrix("2, 0, 1, 1+i;  0, 2, 1+i, -i;  1, 1-i, 2, 0;  1-i, i, 0, 2");
    s.T0 = gi_matrix("1, 0, 0, 0;  0, -1, 0, 0;  0, -1+i, 1, 0;  1-i, 0, 0, -1");
    s.N5 = gi_matrix("1, -1, 0, -i;  -i, 0, i, i;  -i, -1, 1+i, 0;  1, -1+i, 0, -1-i");
    s.N01 = gi_matrix("1+i, 0, -1-i, -i;  0, 1+i, -i, 0;  0, 1, -1-i, 0;  1, -1+i, 0, -1-i");
    s.N45 = gi_matrix("0, 1, 0, i;  0, 1+i, -i, 0;  0, 1, 0, 0;  -1, 0, 1, 1+i");
    s.Nf = gi_matrix("i, 0, 0, 0;  1-i, i, 0, -2;  -i, 0, i, -1+i;  1+i, 0, 0, -i");
    s.E5 = gi_matrix("0, 0, 1, 0;  0, 0, 0, 1;  -1, 0, 0, 0;  0, -1, 0, 0");
    s.q012 = gi_matrix("2, 0, 1, 1-i;  0, 2i, 1+i, -1;  1, 1+i, 2, 0;  1-i, -1, 0, -2i");
    s.q013 = gi_matrix("0, 0, 1, 0;  0, 2i, 1+i, -1;  1, 1+i, 2, 0;  0, -1, 0, 0");
    const GiMat e4_transcribed = gi_matrix(
        "0, 1-i, -i, 1+i;  -1+i, 0, 0, i;  i, 0, 0, 1+i;  -1-i, -i, -1-i, 0");

    require(s.H == s.H.conj_transpose(), "H is not Hermitian");
    require(s.q012 == s.q012.transpose(), "q012 is not symmetric");
    require(s.q013 == s.q013.transpose(), "q013 is not symmetric");

    for (const GiMat* m : {&s.T0, &s.N5, &s.N01, &s.N45, &s.Nf})
        require(unitary_for(*m, s.H), "generator is not unitary for H");

    const GiMat n5_inv = gi_inverse(s.N5);
    s.T[0] = s.T0;
    for (std::size_t j = 1; j < 5; ++j) s.T[j] = s.N5 * s.T[j - 1] * n5_inv;

    const GiMat id = GiMat::identity();
    for (const auto& t : s.T) require(t * t == id, "T_j^2 != I");
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) {
            require(s.T[a] * s.T[b] == -(s.T[b] * s.T[a]),
                    "T_a T_b != -T_b T_a");
            const GiMat ab = s.T[a] * s.T[b];
            require(ab * ab == -id, "(T_a T_b)^2 != -I");
        }

    const GiMat n01_inv = gi_inverse(s.N01);
    require(s.N01 * s.T[0] * n01_inv == s.T[1], "N01 T0 N01^-1 != T1");
    require(s.N01 * s.T[2] * n01_inv == s.T[2], "N01 does not fix T2");
    require(s.N01 * s.T[3] * n01_inv == s.T[3], "N01 does not fix T3");
    require(s.N01 * s.T[4] * n01_inv == -s.T[4], "N01 T4 N01^-1 != -T4");

    const GiMat n45_inv = gi_inverse(s.N45);
    for (std::size_t j = 0; j < 4; ++j)
        require(s.N45 * s.T[j] * n45_inv == (s.T[j] * s.T[4]).scaled(Gi{0, -1}),
                "N45 T_j N45^-1 != -i T_j T4");
    require(s.N45 * s.T[4] * n45_inv == s.T[4], "N45 does not fix T4");

    s.E4 = s.N45 * s.E5 * s.N45.transpose();
    require(s.E4 == e4_transcribed, "E4 transcription mismatch");

    return s;
}

}  // namespace detail

inline const StandardGenerators& standard_generators() {
    static const StandardGenerators s = detail::build_standard_generators();
    return s;
}

}  // namespace epwv::abelian
