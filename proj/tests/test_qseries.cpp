#include <doctest.h>

#include <cmath>
#include <numbers>

#include <hvf/qseries.hpp>

using namespace hvf;

namespace
{

std::int64_t brute_sigma(std::int64_t n, int k)
{
    std::int64_t s = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            std::int64_t p = 1;
            for (int i = 0; i < k; ++i) {
                p *= d;
            }
            s += p;
        }
    }
    return s;
}

// E_2(z) by direct summation of 1 - 24 sum sigma_1(n) q^n.
cplx e2_direct(cplx z, int n_max)
{
    const cplx q = std::exp(2.0 * std::numbers::pi * cplx{0.0, 1.0} * z);
    cplx sum = 1.0;
    cplx qn = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        qn *= q;
        sum -= 24.0 * static_cast<double>(brute_sigma(n, 1)) * qn;
    }
    return sum;
}

} // namespace

TEST_CASE("divisor sums")
{
    CHECK(divisor_sum(6, 1) == 12);
    CHECK(divisor_sum(4, 3) == 73);
    for (int k = 0; k <= 5; ++k) {
        CHECK(divisor_sum(1, k) == 1);
    }
    for (std::int64_t n = 1; n <= 100; ++n) {
        for (int k : {0, 1, 3, 5}) {
            CHECK(divisor_sum(n, k) == brute_sigma(n, k));
        }
    }
    CHECK_THROWS_AS(divisor_sum(0, 1), std::domain_error);
}

TEST_CASE("Eisenstein coefficients")
{
    const QSeries e2 = eisenstein_mu3(2, 64);
    CHECK(e2.order() == 64);
    CHECK(e2.weight() == 2);
    CHECK(e2[0] == cplx{1.0});
    CHECK(e2[1] == cplx{-24.0});
    CHECK(e2[2] == cplx{-72.0});
    CHECK(e2[3] == cplx{-96.0});
    CHECK(eisenstein_mu3(4, 16)[1] == cplx{240.0});
    CHECK(eisenstein_mu3(6, 16)[0] == cplx{1.0});
    CHECK(eisenstein_mu3(6, 16)[1] == cplx{-504.0});
    for (std::size_t n = 1; n <= 64; ++n) {
        CHECK(e2[n].real() == -24.0 * static_cast<double>(brute_sigma(static_cast<std::int64_t>(n), 1)));
    }
    CHECK_THROWS_AS(eisenstein_mu3(8, 16), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein_mu3(4, 4), std::invalid_argument);
}

TEST_CASE("series arithmetic")
{
    const QSeries e2 = eisenstein_mu3(2, 32);
    const QSeries d = e2.derive();
    CHECK(d[1] == cplx{-24.0});
    CHECK(d[0] == cplx{0.0});
    CHECK(d.weight() == 4);

    const QSeries one = QSeries::constant(1.0, 1.0, 32);
    const QSeries p = e2 * one;
    CHECK(p.coeffs() == e2.coeffs());

    const QSeries e4 = eisenstein_mu3(4, 16);
    CHECK((e2 * e4).order() == 16);

    const QSeries other(2.0, std::vector<cplx>(8, 1.0), 2);
    CHECK_THROWS_WITH_AS(e2 + other, "period mismatch", std::invalid_argument);
    CHECK_THROWS_WITH_AS(e2 + e4, "weight mismatch", std::invalid_argument);
    CHECK_THROWS_AS(QSeries(1.0, {1.0}, 0), std::invalid_argument);
}

TEST_CASE("Ramanujan identity for E2 coefficientwise")
{
    const QSeries e2 = eisenstein_mu3(2, 64);
    const QSeries e4 = eisenstein_mu3(4, 64);
    const QSeries lhs = e2.derive().scaled(12.0) + e4.truncated(64).scaled(1.0);
    const QSeries sq = e2 * e2;
    for (std::size_t n = 0; n <= 64; ++n) {
        const double scale = std::max(1.0, std::abs(sq[n]));
        // DE2 has weight 4 nominally; compare the raw coefficients
        CHECK(std::abs(lhs[n] - sq[n]) / scale < 1e-12);
    }
}

TEST_CASE("evaluation")
{
    const QSeries one = QSeries::constant(1.0, 1.0, 8);
    const Evaluation c = eval_qseries(one, cplx{0.3, 0.2});
    CHECK(c.value == cplx{1.0});
    CHECK(c.tail_bound == 0.0);

    const QSeries e2 = eisenstein_mu3(2, 64);
    const Evaluation at2i = eval_qseries(e2, cplx{0.0, 2.0});
    CHECK(std::abs(at2i.value - 1.0) < 1e-4);
    CHECK(std::abs(at2i.value - e2_direct(cplx{0.0, 2.0}, 400)) < 1e-14);

    for (const cplx z : {cplx{0.1, 0.8}, cplx{-0.4, 1.3}, cplx{0.0, 0.6}}) {
        const Evaluation a = eval_qseries(e2, z);
        const Evaluation b = eval_qseries(e2, z + 1.0);
        CHECK(std::abs(a.value - b.value) < 1e-12 * std::max(1.0, std::abs(a.value)));
        CHECK(std::abs(a.value - e2_direct(z, 400)) <= a.tail_bound + 1e-12);
    }
    CHECK_THROWS_WITH_AS(eval_qseries(e2, cplx{0.0, 0.0}), "not in upper half-plane", std::domain_error);
    CHECK_THROWS_AS(eval_qseries(e2, cplx{0.5, -1.0}), std::domain_error);
}

TEST_CASE("group data")
{
    CHECK(hecke_width(3) == doctest::Approx(1.0));
    CHECK(hecke_width(4) == doctest::Approx(std::sqrt(2.0)));
    const HeckeGroup g = modular_group();
    CHECK(g.omega == 1.0);
    CHECK(std::abs(g.C - cplx{0.0, -6.0 / std::numbers::pi}) < 1e-15);
    CHECK(g.T(cplx{0.5, 1.0}) == cplx{1.5, 1.0});
    CHECK(std::abs(g.S(cplx{0.0, 2.0}) - cplx{0.0, 0.5}) < 1e-15);
    CHECK_THROWS_AS(hecke_group(2, 1.0), std::invalid_argument);
}
