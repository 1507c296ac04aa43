#include <doctest.h>

#include <random>

#include <hvf/laurent_poly.hpp>

#include "test_support.hpp"

using namespace hvf;

namespace
{

struct Fixture {
    SymbolSetPtr syms = SymbolSet::standard(2);
    LaurentPoly z = LaurentPoly::variable(syms, "z");
    LaurentPoly E = LaurentPoly::variable(syms, "E");
    LaurentPoly C = LaurentPoly::variable(syms, "C");
    LaurentPoly W = LaurentPoly::variable(syms, "varpi");
    LaurentPoly one = LaurentPoly(syms, Rational(1));
    LaurentPoly zinv = LaurentPoly::variable(syms, "z", -1);
};

} // namespace

TEST_CASE("rational stays canonical")
{
    const Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(3, 2)).is_one());
    CHECK(Rational::from_string("-10/4") == Rational(-5, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
}

TEST_CASE_FIXTURE(Fixture, "poly_arith examples")
{
    CHECK((z + one) * (z - one) == z * z - Rational(1));
    CHECK(pow(zinv, 2) == LaurentPoly::variable(syms, "z", -2));
    CHECK(E * (C * z) == C * E * z);
    CHECK_THROWS_WITH_AS(pow(z, -1), "unsupported exponent", std::invalid_argument);
    CHECK(pow(z + one, 0) == one);
}

TEST_CASE_FIXTURE(Fixture, "canonical form drops zero terms")
{
    const LaurentPoly p = z + E - z;
    CHECK(p.size() == 1);
    CHECK(p == E);
    CHECK((E - E).is_zero());
    CHECK((E * Rational(0)).is_zero());
    CHECK((z * zinv) == one);
    CHECK_FALSE(z == zinv);
}

TEST_CASE_FIXTURE(Fixture, "only z may carry negative exponents")
{
    LaurentPoly::Exponents e(syms->size(), 0);
    e[syms->index_of("E")] = -1;
    CHECK_THROWS_AS(LaurentPoly::monomial(syms, e, Rational(1)), std::domain_error);
    CHECK_NOTHROW(LaurentPoly::variable(syms, "z", -3));
}

TEST_CASE("symbol sets are closed")
{
    auto syms = SymbolSet::create({"z", "E", "B0"});
    CHECK_THROWS_WITH_AS(syms->index_of("F"), "unknown symbol: F", std::invalid_argument);
    CHECK_THROWS_AS(SymbolSet::create({"z", "Eee"}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolSet::create({"z", "z"}), std::invalid_argument);
    auto other = SymbolSet::create({"z", "E"});
    CHECK_THROWS_AS(LaurentPoly::variable(syms, "z") + LaurentPoly::variable(other, "z"), std::invalid_argument);
    // equal content counts as the same set
    auto same = SymbolSet::create({"z", "E", "B0"});
    CHECK(LaurentPoly::variable(syms, "E") == LaurentPoly::variable(same, "E"));
}

TEST_CASE_FIXTURE(Fixture, "substitute examples")
{
    RingHom s(syms);
    s.set("z", -zinv);
    CHECK(s(z * z) == LaurentPoly::variable(syms, "z", -2));

    RingHom e(syms);
    e.set("E", z * z * E + C * z);
    // (z^2 E + C z)^2 expanded by hand
    LaurentPoly expected = LaurentPoly::variable(syms, "z", 4) * E * E + Rational(2) * C * pow(z, 3) * E +
                           C * C * z * z;
    CHECK(e(E * E) == expected);

    RingHom t(syms);
    t.set("z", z + W);
    CHECK(t(z * z) == z * z + Rational(2) * W * z + W * W);
}

TEST_CASE_FIXTURE(Fixture, "substitute rejects non-invertible images")
{
    RingHom h(syms);
    h.set("z", z + one);
    CHECK_THROWS_WITH_AS(h(zinv), "non-invertible image", std::domain_error);
    RingHom g(syms);
    g.set("z", E * z);
    CHECK_THROWS_WITH_AS(g(zinv), "non-invertible image", std::domain_error);
    // positive powers are fine either way
    CHECK(h(z * z) == z * z + Rational(2) * z + Rational(1));
}

TEST_CASE_FIXTURE(Fixture, "evaluate")
{
    const LaurentPoly p = Rational(1, 2) * z * z * E + C * zinv;
    const std::map<std::string, std::complex<double>> v{{"z", {0.0, 2.0}}, {"E", 3.0}, {"C", {1.0, 1.0}}};
    const std::complex<double> zz{0.0, 2.0};
    const auto expected = 0.5 * zz * zz * 3.0 + std::complex<double>{1.0, 1.0} / zz;
    CHECK(std::abs(evaluate(p, v) - expected) < 1e-14);
    CHECK_THROWS_AS(evaluate(p, std::map<std::string, std::complex<double>>{{"z", 1.0}}), std::invalid_argument);
}

TEST_CASE_FIXTURE(Fixture, "to_string")
{
    CHECK((z * z - Rational(1)).to_string() == "z^2 - 1");
    CHECK((Rational(1, 2) * C * LaurentPoly::variable(syms, "B1")).to_string() == "1/2*C*B1");
    CHECK((-zinv).to_string() == "-z^-1");
    CHECK(LaurentPoly(syms).to_string() == "0");
}

TEST_CASE_FIXTURE(Fixture, "ring axioms on random instances")
{
    std::mt19937_64 rng(7);
    const std::vector<std::string> use{"z", "E", "C", "B0"};
    for (int i = 0; i < 200; ++i) {
        const auto a = test::random_poly(rng, syms, use);
        const auto b = test::random_poly(rng, syms, use);
        const auto c = test::random_poly(rng, syms, use);
        CHECK(((a + b) + c) == (a + (b + c)));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE_FIXTURE(Fixture, "substitution is a homomorphism on random instances")
{
    std::mt19937_64 rng(11);
    const std::vector<std::string> use{"z", "E", "C", "B0", "B1"};
    RingHom h(syms);
    h.set("z", -zinv);
    h.set("E", z * z * E + C * z);
    h.set("B0", pow(z, 4) * LaurentPoly::variable(syms, "B0"));
    RingHom t(syms);
    t.set("z", z + W);
    for (int i = 0; i < 100; ++i) {
        const auto a = test::random_poly(rng, syms, use);
        const auto b = test::random_poly(rng, syms, use);
        CHECK(h(a * b) == h(a) * h(b));
        CHECK(h(a + b) == h(a) + h(b));
        // T only for polynomial inputs: z + varpi is not invertible
        const auto pa = test::random_polynomial(rng, syms, {"z", "E"});
        const auto pb = test::random_polynomial(rng, syms, {"z", "C"});
        CHECK(t(pa * pb) == t(pa) * t(pb));
    }
}

TEST_CASE_FIXTURE(Fixture, "z -> -1/z is an involution")
{
    std::mt19937_64 rng(13);
    RingHom s(syms);
    s.set("z", -zinv);
    for (int i = 0; i < 200; ++i) {
        const auto p = test::random_poly(rng, syms, {"z", "E", "C", "B2"}, 6);
        CHECK(poly_equal(s(s(p)), p));
    }
}

TEST_CASE_FIXTURE(Fixture, "degree queries")
{
    const LaurentPoly p = pow(z, 3) * E + zinv * zinv;
    CHECK(p.degree_in("z") == 3);
    CHECK(p.min_degree_in("z") == -2);
    CHECK(p.contains("E"));
    CHECK_FALSE(p.contains("C"));
    CHECK_FALSE(p.is_polynomial());
    CHECK(E.is_polynomial());
}
