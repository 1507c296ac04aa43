#ifndef HVF_QSERIES_HPP
#define HVF_QSERIES_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace hvf
{

using cplx = std::complex<double>;

/// Hecke triangle group data: T z = z + omega, S z = -1/z, and the structure
/// constant C of its weight-2 Eisenstein series.
struct HeckeGroup {
    int mu = 3;
    double omega = 1.0;
    cplx C;

    cplx T(cplx z) const { return z + omega; }
    cplx S(cplx z) const { return -1.0 / z; }
};

// 2 cos(pi / mu)
double hecke_width(int mu);

// -6i/pi = 12/(2 pi i): the constant in E_2(-1/z) = z^2 E_2(z) + C z for
// E_2 = 1 - 24 sum sigma_1(n) q^n.
cplx structure_constant_mu3();

// mu = 3 with the classical constant.
HeckeGroup modular_group();
// Any mu >= 3 with a caller-supplied constant.
HeckeGroup hecke_group(int mu, cplx C);

/// Truncated Fourier expansion sum_{n=0}^{N} a_n q^n, q = exp(2 pi i z / period).
class QSeries
{
public:
    // Needs at least two coefficients (N >= 1).
    QSeries(double period, std::vector<cplx> coeffs, int weight);

    static QSeries constant(double period, cplx value, std::size_t order, int weight = 0);

    double period() const { return m_period; }
    int weight() const { return m_weight; }
    // Truncation order N.
    std::size_t order() const { return m_coeffs.size() - 1; }
    const std::vector<cplx> &coeffs() const { return m_coeffs; }
    cplx operator[](std::size_t n) const { return m_coeffs.at(n); }

    // Addition requires matching period and weight; all results are
    // truncated to the smaller order.
    friend QSeries operator+(const QSeries &a, const QSeries &b);
    friend QSeries operator-(const QSeries &a, const QSeries &b);
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator*(cplx s, const QSeries &a) { return a.scaled(s); }

    QSeries scaled(cplx s) const;
    // q d/dq: multiplies a_n by n and raises the nominal weight by 2.
    QSeries derive() const;
    QSeries truncated(std::size_t order) const;

private:
    double m_period;
    std::vector<cplx> m_coeffs;
    int m_weight;
};

// sum of d^k over the divisors d of n; throws std::domain_error for n < 1.
std::int64_t divisor_sum(std::int64_t n, int k);

// E_2, E_4, E_6 for the modular group (period 1) through q^terms.
QSeries eisenstein_mu3(int weight, std::size_t terms);

struct Evaluation {
    cplx value;
    double tail_bound;
};

// Value at z (Im z > 0) and a bound on the omitted tail assuming
// |a_n| <= A n^max(weight,1), with A fitted on the stored coefficients.
Evaluation eval_qseries(const QSeries &s, cplx z);

} // namespace hvf

#endif
