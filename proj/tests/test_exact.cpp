// Tests for the exact arithmetic substrate: Gaussian rationals, dense exact
// matrices, Smith normal form, and quadratic-form utilities.

#include <catch2/catch_amalgamated.hpp>

#include "epwv/exact/gaussian.hpp"
#include "epwv/exact/matrix.hpp"
#include "epwv/exact/perm.hpp"
#include "epwv/exact/smith.hpp"

using namespace epwv::exact;

namespace {

Matrix<Gq> gq_matrix(std::size_t rows, std::size_t cols,
                     std::vector<long> entries) {
    std::vector<Gq> e;
    e.reserve(entries.size());
    for (long v : entries) e.emplace_back(v);
    return Matrix<Gq>(rows, cols, std::move(e));
}

ZMatrix z_matrix(std::size_t rows, std::size_t cols,
                 std::vector<long> entries) {
    std::vector<mpz_class> e;
    e.reserve(entries.size());
    for (long v : entries) e.emplace_back(v);
    return ZMatrix(rows, cols, std::move(e));
}

}  // namespace

TEST_CASE("Gaussian rational arithmetic", "[exact]") {
    Gq half(1, 2);
    Gq i = Gq::i();
    CHECK(i * i == Gq(-1));
    CHECK((half + half) == Gq(1));
    CHECK((Gq(3) / Gq(4)).str() == "3/4");
    CHECK((Gq(-1, 2) + Gq(mpq_class(0), mpq_class(3, 4))).str() ==
          "-1/2+3/4*i");
    CHECK((Gq(1) - i).str() == "1/1-1/1*i");
    Gq z(mpq_class(2, 3), mpq_class(-1, 5));
    CHECK(z * z.inverse() == Gq(1));
    CHECK(z.conj().conj() == z);
    CHECK(z.norm() == z.re() * z.re() + z.im() * z.im());
    CHECK(Gq(7).is_integer());
    CHECK(!half.is_integer());
    CHECK(z + (-z) == Gq(0));
}

TEST_CASE("matrix_rank basic cases", "[exact]") {
    CHECK(matrix_rank(Matrix<Gq>::identity(4)) == 4);
    CHECK(matrix_rank(Matrix<Gq>(3, 5)) == 0);
    // one dependent row
    auto m = gq_matrix(3, 3, {1, 2, 3, 2, 4, 6, 0, 1, 1});
    CHECK(matrix_rank(m) == 2);
}

TEST_CASE("matrix_kernel basic cases", "[exact]") {
    CHECK(matrix_kernel(Matrix<Gq>::identity(3)).empty());
    auto k = matrix_kernel(gq_matrix(1, 2, {1, -1}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<Gq>{Gq(1), Gq(1)});
    // rank + nullity = cols
    auto m = gq_matrix(2, 4, {1, 0, 2, 3, 0, 1, 1, 1});
    CHECK(matrix_rank(m) + matrix_kernel(m).size() == m.cols());
    // kernel vectors actually lie in the null space
    for (const auto& v : matrix_kernel(m)) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Gq dot(0);
            for (std::size_t c = 0; c < m.cols(); ++c) dot += m(r, c) * v[c];
            CHECK(dot == Gq(0));
        }
    }
}

TEST_CASE("matrix_det basic cases", "[exact]") {
    CHECK(matrix_det(Matrix<Gq>::identity(4)) == Gq(1));
    CHECK(matrix_det(Matrix<Gq>::identity(4).scaled(Gq(2))) == Gq(16));
    CHECK(matrix_det(gq_matrix(2, 2, {0, 1, 1, 0})) == Gq(-1));
    CHECK(matrix_det(gq_matrix(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9})) == Gq(0));
    CHECK_THROWS_AS(matrix_det(Matrix<Gq>(2, 3)), std::invalid_argument);
    // Gaussian entries
    Matrix<Gq> g(2, 2);
    g(0, 0) = Gq(1);
    g(0, 1) = Gq::i();
    g(1, 0) = -Gq::i();
    g(1, 1) = Gq(1);
    CHECK(matrix_det(g) == Gq(0));
    g(1, 1) = Gq(2);
    CHECK(matrix_det(g) == Gq(1));
    CHECK(matrix_det(g) == matrix_det_cofactor(g));
}

TEST_CASE("matrix_inverse", "[exact]") {
    auto m = gq_matrix(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 2});
    auto inv = matrix_inverse(m);
    CHECK(m * inv == Matrix<Gq>::identity(3));
    CHECK(inv * m == Matrix<Gq>::identity(3));
    CHECK_THROWS_AS(matrix_inverse(gq_matrix(2, 2, {1, 2, 2, 4})),
                    std::invalid_argument);
}

TEST_CASE("smith_normal_form basic cases", "[exact]") {
    auto s1 = smith_normal_form(z_matrix(1, 1, {2}));
    REQUIRE(s1.diag.size() == 1);
    CHECK(s1.diag[0] == 2);
    CHECK(smith_is_valid(z_matrix(1, 1, {2}), s1));

    auto a2 = z_matrix(2, 2, {1, 0, 0, 0});
    auto s2 = smith_normal_form(a2);
    CHECK(s2.diag == std::vector<mpz_class>{1, 0});
    CHECK(smith_is_valid(a2, s2));

    auto a3 = z_matrix(2, 2, {2, 4, 6, 8});
    auto s3 = smith_normal_form(a3);
    CHECK(s3.diag == std::vector<mpz_class>{2, 4});
    CHECK(smith_is_valid(a3, s3));
    CHECK(nonzero_divisor_product(s3) == 8);

    // negative entries, non-square
    auto a4 = z_matrix(2, 3, {6, -4, 0, 2, 2, 10});
    auto s4 = smith_normal_form(a4);
    CHECK(smith_is_valid(a4, s4));
}

TEST_CASE("is_positive_definite_hermitian", "[exact]") {
    Matrix<Gq> h(2, 2);
    h(0, 0) = Gq(2);
    h(0, 1) = Gq::i();
    h(1, 0) = -Gq::i();
    h(1, 1) = Gq(2);
    CHECK(is_positive_definite_hermitian(h));
    CHECK(!is_positive_definite_hermitian(h.scaled(Gq(-1))));
    CHECK(!is_positive_definite_hermitian(gq_matrix(2, 2, {1, 0, 0, -1})));
    // non-Hermitian rejected
    Matrix<Gq> nh(2, 2);
    nh(0, 1) = Gq::i();
    nh(1, 0) = Gq::i();
    CHECK_THROWS_AS(is_positive_definite_hermitian(nh),
                    std::invalid_argument);
}

TEST_CASE("count_vectors_of_norm small lattices", "[exact]") {
    CHECK(count_vectors_of_norm(z_matrix(1, 1, {2}), 2) == 2);
    CHECK(count_vectors_of_norm(z_matrix(2, 2, {1, 0, 0, 1}), 1) == 4);
    // A2 root lattice: 6 roots of norm 2
    CHECK(count_vectors_of_norm(z_matrix(2, 2, {2, -1, -1, 2}), 2) == 6);
    CHECK_THROWS_AS(count_vectors_of_norm(z_matrix(2, 2, {1, 0, 0, -1}), 2),
                    std::invalid_argument);
}

TEST_CASE("permutations", "[exact]") {
    auto t01 = Perm<3>::transposition(0, 1);
    auto t12 = Perm<3>::transposition(1, 2);
    CHECK(t01.sign() == -1);
    CHECK(t01.then(t01) == Perm<3>());
    CHECK(permutation_closure<3>({t01, t12}).size() == 6);
    CHECK(all_permutations<4>().size() == 24);
    auto p = t01.then(t12);  // apply t01 first, then t12
    CHECK(p.map[0] == 2);
    CHECK(p.map[1] == 0);
    CHECK(p.map[2] == 1);
    CHECK(p.then(p.inverse()) == Perm<3>());
    CHECK(p.sign() == 1);
}
