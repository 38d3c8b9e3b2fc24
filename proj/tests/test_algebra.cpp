#include "hesslab/linalg.hpp"
#include "hesslab/poly.hpp"

#include <doctest.h>

#include <random>

using namespace hesslab;

TEST_CASE("rational row reduction") {
    auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
    const auto kernel = nullspace(m);
    REQUIRE(kernel.size() == 1);
    for (std::size_t r = 0; r < 3; ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * kernel[0][c];
        CHECK(s == 0);
    }
    auto a = RationalMatrix::from_rows({{Rational(1, 2), 1}, {3, 4}}, 2);
    CHECK(determinant(a) == Rational(-1));
    const auto x = solve(a, {1, 2});
    REQUIRE(x);
    CHECK((*x)[0] * Rational(1, 2) + (*x)[1] == 1);
    CHECK_FALSE(solve(m, {0, 1, 0}));
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4/1");
}

TEST_CASE("rank agrees across exact routes") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
        RationalMatrix q(rows, cols);
        IntegerMatrix z(rows, cols);
        ModMatrix p(rows, cols);
        const PrimeField f{1000003};
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                const int v = (r + c) % 3 == 0 ? 0 : entry(rng);
                q(r, c) = v;
                z(r, c) = v;
                p(r, c) = *f.reduce(Rational(v));
            }
        CHECK(rank(q) == bareiss_rank(z));
        CHECK(rank(q) == rank_mod(p, f));
    }
}

TEST_CASE("definiteness") {
    auto pd = RationalMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, 3);
    CHECK(positive_definite(pd));
    for (const auto& p : ldl_pivots(pd)) CHECK(p > 0);
    auto indefinite = RationalMatrix::from_rows({{0, 1}, {1, 0}}, 2);
    CHECK_FALSE(positive_definite(indefinite));
    const Inertia i = inertia(indefinite);
    CHECK(i.positive == 1);
    CHECK(i.negative == 1);
    CHECK(i.zero == 0);
    const Inertia j = inertia(RationalMatrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, -2}}, 3));
    CHECK(j.positive == 1);
    CHECK(j.negative == 1);
    CHECK(j.zero == 1);
}

TEST_CASE("prime field") {
    const PrimeField f{13};
    CHECK(f.mul(f.inv(5), 5) == 1);
    CHECK(*f.reduce(Rational(1, 2)) == 7);
    CHECK_FALSE(f.reduce(Rational(1, 26)));
    CHECK(is_prime(2147483647ULL));
    CHECK(next_prime(10) == 11);
    CHECK(next_prime(17) == 17);
    CHECK(next_prime(18) == 19);
}

TEST_CASE("monomials") {
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomial_count(3, 2) == 6);
    CHECK(monomial_count(0, 0) == 1);
    CHECK(monomial_count(0, 2) == 0);
    const auto ms = monomials_of_degree(2, 3);
    CHECK(std::is_sorted(ms.begin(), ms.end()));
    const Monomial m = Monomial::from_exponents({2, 0, 1});
    CHECK(m.degree() == 3);
    CHECK(m.exponent(2) == 1);
    CHECK(m.divided_by_variable(0) == Monomial::from_exponents({1, 0, 1}));
}

TEST_CASE("polynomial arithmetic and division") {
    const Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
    const Poly f = (x - y) * (x + y * Rational(3)) * (x - y * Rational(1, 2));
    CHECK(f.degree() == 3);
    CHECK(f.is_homogeneous());
    const auto q = f.divide_by_linear(x - y);
    REQUIRE(q);
    CHECK(*q * (x - y) == f);
    CHECK_FALSE(f.divide_by_linear(x + y));
    CHECK((x + y).pow(3).coefficient(Monomial::from_exponents({1, 2})) == 3);
    const Poly swapped = f.substitute({y, x});
    CHECK(swapped.evaluate({2, 5}) == f.evaluate({5, 2}));
    CHECK((x - x).is_zero());
    CHECK(Poly::linear({1, -1}) == x - y);
    CHECK(Poly::constant(2, 3).constant_term() == 3);
}
