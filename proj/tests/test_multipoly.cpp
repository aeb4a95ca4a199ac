// Tests for sparse multivariate polynomial algebra: arithmetic, substitution,
// differentiation, monic division, square roots, and the symmetric sextics.

#include <catch2/catch_amalgamated.hpp>

#include "epwv/multipoly/polynomial.hpp"
#include "epwv/multipoly/symmetric.hpp"

using namespace epwv::multipoly;
using epwv::exact::Gq;

namespace {

Poly x(int var) { return Poly::variable(6, var); }

std::vector<Gq> ones() { return std::vector<Gq>(6, Gq(1)); }

}  // namespace

TEST_CASE("multiply", "[multipoly]") {
    Poly a = Poly::variable(2, 0) + Poly::variable(2, 1);
    Poly b = Poly::variable(2, 0) - Poly::variable(2, 1);
    Poly want = Poly::monomial(2, {2, 0}) - Poly::monomial(2, {0, 2});
    CHECK(a * b == want);

    Poly F6 = f6();
    CHECK(F6 * Poly::constant(6, Gq(1)) == F6);

    Poly p111111 = monomial_symmetric(6, {1, 1, 1, 1, 1, 1});
    Poly sq = p111111 * p111111;
    REQUIRE(sq.term_count() == 1);
    CHECK(sq == Poly::monomial(6, {2, 2, 2, 2, 2, 2}));
}

TEST_CASE("arity mismatch rejected", "[multipoly]") {
    Poly a = Poly::variable(2, 0);
    Poly b = Poly::variable(3, 0);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("substitute", "[multipoly]") {
    Poly a = Poly::variable(2, 0) + Poly::variable(2, 1);
    Poly r = a.subst({Poly::variable(1, 0), Poly::variable(1, 0)});
    CHECK(r == Poly::variable(1, 0).scaled(Gq(2)));

    // composing with constants equals evaluation
    Poly F6 = f6();
    std::vector<Poly> const_images;
    for (int v = 0; v < 6; ++v)
        const_images.push_back(Poly::constant(1, Gq(1)));
    Poly at_ones = F6.subst(const_images);
    CHECK(at_ones == Poly::constant(1, F6.eval(ones())));
}

TEST_CASE("F6 shape and special values", "[multipoly]") {
    Poly F6 = f6();
    CHECK(F6.term_count() == 57);
    CHECK(F6.degree() == 6);
    // 6 - 30 + 2*20 - 16 = 0: both the value and the x0-derivative vanish at
    // the all-ones point (it is a 4-fold point of the sextic).
    CHECK(F6.eval(ones()) == Gq(0));
    CHECK(F6.diff(0).eval(ones()) == Gq(0));
    // a genuinely nonzero value, for contrast
    CHECK(F6.eval({Gq(1), Gq(0), Gq(0), Gq(0), Gq(0), Gq(0)}) == Gq(1));
    // the four-fold point with two sign flips lies on the sextic
    CHECK(F6.eval({Gq(1), Gq(-1), Gq(1), Gq(1), Gq(-1), Gq(1)}) == Gq(0));
}

TEST_CASE("partial_derivative", "[multipoly]") {
    Poly p = Poly::monomial(1, {3});
    CHECK(p.diff(0) == Poly::monomial(1, {2}, Gq(3)));
    CHECK(Poly::constant(3, Gq(5)).diff(1).is_zero());
    CHECK_THROWS_AS(Poly::constant(3, Gq(5)).diff(3), std::invalid_argument);
    CHECK_THROWS_AS(Poly::constant(3, Gq(5)).diff(-1), std::invalid_argument);
}

TEST_CASE("divide_by_monic_in_variable", "[multipoly]") {
    Poly num = Poly::monomial(2, {2, 0}) - Poly::monomial(2, {0, 2});
    Poly den = Poly::variable(2, 0) - Poly::variable(2, 1);
    auto [q, r] = divide_by_monic_in_variable(num, den, 0);
    CHECK(q == Poly::variable(2, 0) + Poly::variable(2, 1));
    CHECK(r.is_zero());

    Poly F6 = f6();
    auto self = divide_by_monic_in_variable(F6, F6, 0);
    CHECK(self.quotient == Poly::constant(6, Gq(1)));
    CHECK(self.remainder.is_zero());

    // non-monic divisor rejected
    CHECK_THROWS_AS(
        divide_by_monic_in_variable(num, den.scaled(Gq(2)), 0),
        std::invalid_argument);

    // F6 is monic in x0 (only P6 contributes x0^6), so this must not throw
    auto dr = divide_by_monic_in_variable(F6 * (x(1) + x(2)), F6, 0);
    CHECK(dr.quotient == x(1) + x(2));
    CHECK(dr.remainder.is_zero());
}

TEST_CASE("perfect_square_root", "[multipoly]") {
    Poly s = Poly::variable(2, 0) + Poly::variable(2, 1);
    auto r = perfect_square_root(s * s);
    REQUIRE(r.has_value());
    CHECK(r->scale == Gq(1));
    CHECK(r->root == s);

    CHECK(!perfect_square_root(Poly::monomial(2, {2, 0}) +
                               Poly::monomial(2, {0, 2}))
               .has_value());

    // scalar extraction: 3*(x0+2x1)^2
    Poly t = Poly::variable(2, 0) + Poly::variable(2, 1).scaled(Gq(2));
    auto rt = perfect_square_root((t * t).scaled(Gq(3)));
    REQUIRE(rt.has_value());
    CHECK(rt->scale == Gq(3));
    CHECK(rt->root == t);

    // odd leading exponent -> absent
    CHECK(!perfect_square_root(Poly::monomial(2, {3, 1})).has_value());
}

TEST_CASE("symmetric_monomial_basis", "[multipoly]") {
    auto basis = symmetric_monomial_basis();
    REQUIRE(basis.size() == 11);
    for (const auto& p : basis) CHECK(p.degree() == 6);
    CHECK(monomial_symmetric(6, {1, 1, 1, 1, 1, 1}).term_count() == 1);
    CHECK(monomial_symmetric(6, {6}).term_count() == 6);
    CHECK(monomial_symmetric(6, {4, 2}).term_count() == 30);
    CHECK(monomial_symmetric(6, {2, 2, 2}).term_count() == 20);
}

TEST_CASE("evaluate", "[multipoly]") {
    Poly p = Poly::monomial(2, {1, 1}, Gq(3)) + Poly::constant(2, Gq(7));
    CHECK(p.eval({Gq(0), Gq(0)}) == Gq(7));
    CHECK(p.eval({Gq(2), Gq(1, 2)}) == Gq(10));
    CHECK_THROWS_AS(p.eval({Gq(1)}), std::invalid_argument);
    // Gaussian point
    Poly q = Poly::monomial(1, {2});
    CHECK(q.eval({Gq::i()}) == Gq(-1));
}

TEST_CASE("F6 sign symmetry", "[multipoly]") {
    Poly F6 = f6();
    Poly F6d = f6_dual();
    CHECK(F6d.term_count() == 57);
    // flipping the sign of one variable swaps F6 and F6dual
    std::vector<Poly> flip0;
    flip0.push_back(-x(0));
    for (int v = 1; v < 6; ++v) flip0.push_back(x(v));
    CHECK(F6.subst(flip0) == F6d);
    CHECK(F6d.subst(flip0) == F6);

    // an even number of sign changes preserves F6
    std::vector<Poly> flip01{-x(0), -x(1), x(2), x(3), x(4), x(5)};
    CHECK(F6.subst(flip01) == F6);

    // invariance under a transposition and a 6-cycle (hence all of S6)
    std::vector<Poly> swap01{x(1), x(0), x(2), x(3), x(4), x(5)};
    std::vector<Poly> cyc{x(1), x(2), x(3), x(4), x(5), x(0)};
    CHECK(F6.subst(swap01) == F6);
    CHECK(F6.subst(cyc) == F6);
}

TEST_CASE("dump format", "[multipoly]") {
    Poly p = Poly::monomial(2, {2, 0}) -
             Poly::monomial(2, {0, 1}, Gq(1, 2)) +
             Poly::constant(2, Gq::i());
    CHECK(p.dump() == "1/1 2 0\n-1/2 0 1\n0/1+1/1*i 0 0\n");
    // graded-lex descending with variable 0 highest
    Poly q = Poly::monomial(3, {0, 0, 2}) + Poly::monomial(3, {1, 1, 0}) +
             Poly::monomial(3, {0, 2, 0}) + Poly::monomial(3, {2, 0, 0});
    CHECK(q.dump() == "1/1 2 0 0\n1/1 1 1 0\n1/1 0 2 0\n1/1 0 0 2\n");
    // determinism: same value, different construction order
    Poly q2 = Poly::monomial(3, {0, 2, 0}) + Poly::monomial(3, {2, 0, 0}) +
              Poly::monomial(3, {0, 0, 2}) + Poly::monomial(3, {1, 1, 0});
    CHECK(q.dump() == q2.dump());
}

TEST_CASE("pow and degree bookkeeping", "[multipoly]") {
    Poly s = x(0) + x(1) + x(2) + x(3) + x(4) + x(5);
    Poly s2 = s.pow(2);
    CHECK(s2.degree() == 2);
    CHECK(s2.term_count() == 21);
    CHECK(s.pow(0) == Poly::constant(6, Gq(1)));
    CHECK(s2.degree_in(3) == 2);
}
