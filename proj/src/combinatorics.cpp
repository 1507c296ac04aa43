#include <hvf/combinatorics.hpp>

#include <stdexcept>

namespace hvf
{

Rational binomial(long n, long k)
{
    if (n < 0) {
        throw std::domain_error("binomial with negative n");
    }
    if (k < 0 || k > n) {
        return Rational(0);
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out, mpz_class(1));
}

Rational bracket(long r, long l, long m)
{
    if (l < 0 || r < l || m < 0 || m > r - l) {
        throw std::domain_error("bracket domain");
    }
    return factorial(m + l) * factorial(r - l) / (factorial(m) * factorial(r));
}

bool check_coeff_equiv(long r, long l, long m, long p)
{
    if (l < 0 || m < 0 || p < 0 || l + m + p > r) {
        throw std::domain_error("bracket domain");
    }
    const Rational lhs = binomial(m + p, p) * bracket(r, l, m + p);
    const Rational rhs = binomial(r - l, m) * bracket(r, m + l, p);
    return lhs == rhs;
}

SumPair vandermonde_collapse(long n, long r, long m)
{
    if (n < 0 || n > r || m < 0 || m > r) {
        throw std::domain_error("vandermonde domain");
    }
    Rational lhs(0);
    for (long l = 0; l <= n; ++l) {
        const Rational term = binomial(n, l) * binomial(r - l, r - m);
        lhs += (l % 2 == 0) ? term : -term;
    }
    return {lhs, binomial(r - n, m)};
}

} // namespace hvf
