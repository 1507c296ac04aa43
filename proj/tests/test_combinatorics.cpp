#include <doctest.h>

#include <hvf/combinatorics.hpp>

#include "test_support.hpp"

using namespace hvf;

TEST_CASE("binomial")
{
    CHECK(binomial(4, 2) == Rational(6));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(3, -1) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    for (long n = 0; n <= 20; ++n) {
        for (long k = -2; k <= n + 2; ++k) {
            CHECK(binomial(n, k) == test::pascal_binomial(n, k));
        }
    }
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("bracket values")
{
    for (long r = 0; r <= 6; ++r) {
        CHECK(bracket(r, r, 0) == Rational(1));
    }
    CHECK(bracket(2, 1, 0) == test::naive_bracket(2, 1, 0));
    CHECK(bracket(2, 1, 0) == Rational(1, 2));
    CHECK(bracket(3, 1, 2) == test::naive_bracket(3, 1, 2));
    CHECK(bracket(3, 1, 2) == Rational(1));
}

TEST_CASE("bracket domain errors")
{
    CHECK_THROWS_WITH_AS(bracket(2, 3, 0), "bracket domain", std::domain_error);
    CHECK_THROWS_WITH_AS(bracket(3, 1, 3), "bracket domain", std::domain_error);
    CHECK_THROWS_WITH_AS(bracket(3, -1, 0), "bracket domain", std::domain_error);
    CHECK_THROWS_AS(check_coeff_equiv(2, 1, 1, 1), std::domain_error);
}

TEST_CASE("bracket is positive and matches the factorial oracle")
{
    for (long r = 0; r <= 10; ++r) {
        for (long l = 0; l <= r; ++l) {
            for (long m = 0; m <= r - l; ++m) {
                CHECK(bracket(r, l, m).sign() > 0);
                CHECK(bracket(r, l, m) == test::naive_bracket(r, l, m));
            }
        }
    }
}

TEST_CASE("coefficient identity examples")
{
    // both sides computed independently with the oracle
    auto sides = [](long r, long l, long m, long p) {
        return std::make_pair(test::pascal_binomial(m + p, p) * test::naive_bracket(r, l, m + p),
                              test::pascal_binomial(r - l, m) * test::naive_bracket(r, m + l, p));
    };
    auto [a, b] = sides(2, 0, 1, 1);
    CHECK(a == Rational(2));
    CHECK(b == Rational(2));
    CHECK(check_coeff_equiv(2, 0, 1, 1));
    std::tie(a, b) = sides(3, 1, 1, 1);
    CHECK(a == Rational(2));
    CHECK(b == Rational(2));
    CHECK(check_coeff_equiv(3, 1, 1, 1));
    CHECK(check_coeff_equiv(5, 2, 0, 0));
}

TEST_CASE("coefficient identity on the full grid")
{
    int cases = 0;
    for (long r = 0; r <= 10; ++r) {
        for (long l = 0; l <= r; ++l) {
            for (long m = 0; l + m <= r; ++m) {
                for (long p = 0; l + m + p <= r; ++p) {
                    CHECK(check_coeff_equiv(r, l, m, p));
                    ++cases;
                }
            }
        }
    }
    CHECK(cases == 1001);
}

TEST_CASE("vandermonde collapse")
{
    auto ex = vandermonde_collapse(1, 1, 0);
    CHECK(ex.lhs == Rational(1));
    CHECK(ex.rhs == Rational(1));
    ex = vandermonde_collapse(1, 1, 1);
    CHECK(ex.lhs == Rational(0));
    CHECK(ex.rhs == Rational(0));
    ex = vandermonde_collapse(1, 2, 1);
    CHECK(ex.lhs == Rational(1));
    CHECK(ex.rhs == Rational(1));

    for (long r = 0; r <= 10; ++r) {
        for (long n = 0; n <= r; ++n) {
            for (long m = 0; m <= r; ++m) {
                const auto [lhs, rhs] = vandermonde_collapse(n, r, m);
                CHECK(lhs == rhs);
            }
        }
    }
    CHECK_THROWS_AS(vandermonde_collapse(3, 2, 0), std::domain_error);
}
