#include <hvf/qseries.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hvf
{

namespace
{

void check_period(const QSeries &a, const QSeries &b)
{
    if (std::abs(a.period() - b.period()) > 1e-12 * std::max(1.0, std::abs(a.period()))) {
        throw std::invalid_argument("period mismatch");
    }
}

} // namespace

double hecke_width(int mu)
{
    if (mu < 3) {
        throw std::invalid_argument("mu must be at least 3");
    }
    return 2.0 * std::cos(std::numbers::pi / mu);
}

cplx structure_constant_mu3()
{
    return {0.0, -6.0 / std::numbers::pi};
}

HeckeGroup modular_group()
{
    // 2 cos(pi/3) is 1 up to one ulp; use the exact width.
    return HeckeGroup{3, 1.0, structure_constant_mu3()};
}

HeckeGroup hecke_group(int mu, cplx C)
{
    if (mu == 3) {
        return HeckeGroup{3, 1.0, C};
    }
    return HeckeGroup{mu, hecke_width(mu), C};
}

QSeries::QSeries(double period, std::vector<cplx> coeffs, int weight)
    : m_period(period), m_coeffs(std::move(coeffs)), m_weight(weight)
{
    if (!(period > 0.0)) {
        throw std::invalid_argument("period must be positive");
    }
    if (m_coeffs.size() < 2) {
        throw std::invalid_argument("q-series needs at least a_0 and a_1");
    }
}

QSeries QSeries::constant(double period, cplx value, std::size_t order, int weight)
{
    std::vector<cplx> c(std::max<std::size_t>(order, 1) + 1, cplx{});
    c[0] = value;
    return QSeries(period, std::move(c), weight);
}

QSeries operator+(const QSeries &a, const QSeries &b)
{
    check_period(a, b);
    if (a.weight() != b.weight()) {
        throw std::invalid_argument("weight mismatch");
    }
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<cplx> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = a.m_coeffs[i] + b.m_coeffs[i];
    }
    return QSeries(a.period(), std::move(c), a.weight());
}

QSeries operator-(const QSeries &a, const QSeries &b)
{
    return a + b.scaled(-1.0);
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    check_period(a, b);
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<cplx> c(n, cplx{});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; i + j < n; ++j) {
            c[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
        }
    }
    return QSeries(a.period(), std::move(c), a.weight() + b.weight());
}

QSeries QSeries::scaled(cplx s) const
{
    QSeries out(*this);
    for (auto &c : out.m_coeffs) {
        c *= s;
    }
    return out;
}

QSeries QSeries::derive() const
{
    QSeries out(*this);
    for (std::size_t n = 0; n < out.m_coeffs.size(); ++n) {
        out.m_coeffs[n] *= static_cast<double>(n);
    }
    out.m_weight += 2;
    return out;
}

QSeries QSeries::truncated(std::size_t order) const
{
    if (order < 1 || order > this->order()) {
        throw std::invalid_argument("invalid truncation order");
    }
    return QSeries(m_period, std::vector<cplx>(m_coeffs.begin(), m_coeffs.begin() + order + 1), m_weight);
}

std::int64_t divisor_sum(std::int64_t n, int k)
{
    if (n < 1) {
        throw std::domain_error("divisor_sum needs n >= 1");
    }
    if (k < 0) {
        throw std::domain_error("divisor_sum needs k >= 0");
    }
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        auto p = [k](std::int64_t base) {
            std::int64_t out = 1;
            for (int i = 0; i < k; ++i) {
                out *= base;
            }
            return out;
        };
        sum += p(d);
        if (d != n / d) {
            sum += p(n / d);
        }
    }
    return sum;
}

QSeries eisenstein_mu3(int weight, std::size_t terms)
{
    if (terms < 8) {
        throw std::invalid_argument("eisenstein_mu3 needs at least 8 terms");
    }
    double factor = 0.0;
    int k = 0;
    switch (weight) {
    case 2:
        factor = -24.0;
        k = 1;
        break;
    case 4:
        factor = 240.0;
        k = 3;
        break;
    case 6:
        factor = -504.0;
        k = 5;
        break;
    default:
        throw std::invalid_argument("unsupported Eisenstein weight " + std::to_string(weight));
    }
    std::vector<cplx> c(terms + 1);
    c[0] = 1.0;
    for (std::size_t n = 1; n <= terms; ++n) {
        c[n] = factor * static_cast<double>(divisor_sum(static_cast<std::int64_t>(n), k));
    }
    return QSeries(1.0, std::move(c), weight);
}

Evaluation eval_qseries(const QSeries &s, cplx z)
{
    if (!(z.imag() > 0.0)) {
        throw std::domain_error("not in upper half-plane");
    }
    const cplx q = std::exp(cplx{0.0, 2.0 * std::numbers::pi} * z / s.period());
    const auto &a = s.coeffs();
    cplx value{};
    for (std::size_t n = a.size(); n-- > 0;) {
        value = value * q + a[n];
    }

    const double p = std::max(s.weight(), 1);
    double amp = 0.0;
    for (std::size_t n = 1; n < a.size(); ++n) {
        amp = std::max(amp, std::abs(a[n]) / std::pow(static_cast<double>(n), p));
    }
    double tail = 0.0;
    if (amp > 0.0) {
        const double aq = std::abs(q);
        const double n1 = static_cast<double>(a.size());
        const double ratio = std::pow((n1 + 1.0) / n1, p) * aq;
        tail = ratio < 1.0 ? amp * std::pow(n1, p) * std::pow(aq, n1) / (1.0 - ratio)
                           : std::numeric_limits<double>::infinity();
    }
    return {value, tail};
}

} // namespace hvf
