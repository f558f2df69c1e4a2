#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hookmod/polyring.hpp"

using namespace hookmod;

namespace {

Polynomial random_poly(std::mt19937& rng, int n, int terms, int maxexp) {
    Polynomial p(n);
    for (int t = 0; t < terms; ++t) {
        Monomial m(n);
        for (int i = 0; i < n; ++i) {
            m.xe[i] = rng() % (maxexp + 1);
            m.ye[i] = rng() % (maxexp + 1);
        }
        p.add_term(m, Rational(static_cast<long>(rng() % 7) - 3));
    }
    return p;
}

}  // namespace

TEST_CASE("monomial order: graded lex, x1 > ... > y_n") {
    int n = 3;
    REQUIRE(grlex_cmp(Monomial::x(n, 1), Monomial::x(n, 2)) > 0);
    REQUIRE(grlex_cmp(Monomial::x(n, 3), Monomial::y(n, 1)) > 0);
    REQUIRE(grlex_cmp(Monomial::x(n, 1), Monomial::x(n, 2, 2)) < 0);  // degree first
    REQUIRE(grlex_cmp(Monomial::one(n), Monomial::one(n)) == 0);
}

TEST_CASE("differential pairing on monomials") {
    int n = 2;
    Polynomial x1 = Polynomial::term(Monomial::x(n, 1), 1);
    REQUIRE(diff_pair(x1, x1) == 1);
    Polynomial x1sq = Polynomial::term(Monomial::x(n, 1, 2), 1);
    REQUIRE(diff_pair(x1sq, x1sq) == 2);
    Polynomial x1y2 = Polynomial::term(Monomial::x(n, 1) * Monomial::y(n, 2), 1);
    Polynomial x1x2 = Polynomial::term(Monomial::x(n, 1) * Monomial::x(n, 2), 1);
    REQUIRE(diff_pair(x1y2, x1x2) == 0);

    // diagonality over a small exponent grid
    std::vector<Monomial> grid;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                Monomial m(2);
                m.xe = {a, b};
                m.ye = {c, 0};
                grid.push_back(m);
            }
    for (const auto& m1 : grid)
        for (const auto& m2 : grid) {
            Rational v = diff_pair(Polynomial::term(m1, 1), Polynomial::term(m2, 1));
            if (m1 == m2) {
                Integer w(1);
                for (int e : m1.xe) w *= factorial(e);
                for (int e : m1.ye) w *= factorial(e);
                REQUIRE(v == Rational(w));
            } else {
                REQUIRE(v == 0);
            }
        }
}

TEST_CASE("pairing respects bidegree and matches the operator route") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial f = random_poly(rng, 2, 4, 2), g = random_poly(rng, 2, 4, 2);
        REQUIRE(diff_pair(f, g) == apply_diff_operator(f, g).coeff(Monomial::one(2)));
    }
    // homogeneous pieces of different bidegree pair to zero
    Polynomial f = Polynomial::term(Monomial::x(2, 1, 2), 1);
    Polynomial g = Polynomial::term(Monomial::x(2, 1) * Monomial::y(2, 2), 1);
    REQUIRE(diff_pair(f, g) == 0);
}

TEST_CASE("partial derivatives") {
    int n = 2;
    Polynomial f = Polynomial::term(Monomial::x(n, 1, 2) * Monomial::y(n, 1), 1);
    Polynomial d = f.partial(false, 1);
    REQUIRE(d == Polynomial::term(Monomial::x(n, 1) * Monomial::y(n, 1), 2));
    REQUIRE(Polynomial::term(Monomial::x(n, 1), 1).partial(true, 1).is_zero());

    Polynomial vd(n);  // x2 - x1
    vd.add_term(Monomial::x(n, 2), 1);
    vd.add_term(Monomial::x(n, 1), -1);
    REQUIRE(vd.partial(false, 2) == Polynomial::constant(n, 1));
    REQUIRE(vd.partial(false, 1) == Polynomial::constant(n, -1));
}

TEST_CASE("normal form reduction") {
    {
        int n = 3, k = 2;
        Polynomial f = Polynomial::term(Monomial::x(n, 1) * Monomial::y(n, 1), 1);
        REQUIRE(reduce_mod_Ik(f, n, k).is_zero());
    }
    {
        int n = 4;
        Polynomial f = Polynomial::term(Monomial::x(n, 1) * Monomial::x(n, 2), 1);
        REQUIRE(reduce_mod_Ik(f, 4, 2).is_zero());
        REQUIRE(reduce_mod_Ik(f, 4, 3) == f);
    }
    {
        int n = 7, k = 5;
        Monomial keep = parse_monomial("x1^2 y2^4", n);
        Monomial drop = parse_monomial("x1 y1", n);
        Polynomial f = Polynomial::term(keep, 1) + Polynomial::term(drop, 1);
        REQUIRE(reduce_mod_Ik(f, n, k) == Polynomial::term(keep, 1));
    }
    // idempotence and quotient-homomorphism property
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng() % 2);
        int k = 1 + static_cast<int>(rng() % n);
        Polynomial f = random_poly(rng, n, 4, 2), g = random_poly(rng, n, 4, 2);
        Polynomial rf = reduce_mod_Ik(f, n, k);
        REQUIRE(reduce_mod_Ik(rf, n, k) == rf);
        REQUIRE(reduce_mod_Ik(f * g, n, k) ==
                reduce_mod_Ik(reduce_mod_Ik(f, n, k) * reduce_mod_Ik(g, n, k), n, k));
    }
}

TEST_CASE("split elementary symmetric polynomials") {
    REQUIRE(elementary_ek(3, 3, 2) == elementary_symmetric(3, {1, 2, 3}, 2, false));
    REQUIRE(elementary_ek(3, 1, 1) == elementary_symmetric(3, {1, 2, 3}, 2, true));
    {
        Polynomial e = elementary_ek(4, 3, 3);  // e_1(y)
        Polynomial expect(4);
        for (int i = 1; i <= 4; ++i) expect.add_term(Monomial::y(4, i), 1);
        REQUIRE(e == expect);
    }
    REQUIRE_THROWS_AS(elementary_ek(3, 2, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(elementary_ek(1, 1, 1), std::invalid_argument);

    // symmetry under every transposition of the alphabet
    for (int m = 1; m <= 3; ++m) {
        Polynomial e = elementary_ek(4, 3, m);
        for (int i = 1; i < 4; ++i) {
            Polynomial swapped(4);
            for (const auto& [mono, c] : e.terms()) {
                Monomial t = mono;
                std::swap(t.xe[i - 1], t.xe[i]);
                std::swap(t.ye[i - 1], t.ye[i]);
                swapped.add_term(t, c);
            }
            REQUIRE(swapped == e);
        }
    }
}

TEST_CASE("multiplication in the quotient") {
    int n = 2, k = 2;
    Polynomial x1 = Polynomial::term(Monomial::x(n, 1), 1);
    Polynomial y1 = Polynomial::term(Monomial::y(n, 1), 1);
    REQUIRE(mul_in_Pk(x1, y1, n, k).is_zero());

    Polynomial one = Polynomial::constant(n, 1);
    REQUIRE(mul_in_Pk(x1, one, n, k) == x1);

    {
        int n7 = 7, k5 = 5;
        Polynomial x6 = Polynomial::term(Monomial::x(n7, 6), 1);
        Polynomial e2 = elementary_ek(n7, k5, 2);
        Polynomial got = mul_in_Pk(x6, e2, n7, k5);
        Polynomial oracle = reduce_mod_Ik(x6 * e2, n7, k5);
        REQUIRE(got == oracle);
        for (const auto& [m, c] : got.terms()) REQUIRE(m.xe[5] >= 1);
    }
}

TEST_CASE("canonical serialization") {
    int n = 2;
    Polynomial f(n);
    f.add_term(Monomial::x(n, 1, 2), Rational(1));
    f.add_term(Monomial::y(n, 1), Rational(-2));
    f.add_term(Monomial::one(n), Rational(1, 2));
    REQUIRE(f.str() == "x1^2 - 2 y1 + 1/2");
    REQUIRE(Polynomial(n).str() == "0");
    REQUIRE(Polynomial::constant(n, -1).str() == "-1");
}

TEST_CASE("monomial parsing grammar") {
    REQUIRE(parse_monomial("x1^2 y2^4 x3^2 y5 x6^3", 7).str() == "x1^2 x3^2 x6^3 y2^4 y5");
    REQUIRE(parse_monomial("1", 3).is_one());
    REQUIRE(parse_monomial("x2 x2", 3) == Monomial::x(3, 2, 2));
    REQUIRE_THROWS_AS(parse_monomial("z1", 3), ParseError);
    REQUIRE_THROWS_AS(parse_monomial("x9", 3), ParseError);
    REQUIRE_THROWS_AS(parse_monomial("x1^0", 3), ParseError);
    REQUIRE_THROWS_AS(parse_monomial("x", 3), ParseError);
}
