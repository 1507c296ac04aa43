#ifndef HVF_TESTS_TEST_SUPPORT_HPP
#define HVF_TESTS_TEST_SUPPORT_HPP

// Test-only helpers: random generators and oracles that do not go through
// the library's own code paths.

#include <cstdint>
#include <random>
#include <vector>

#include <hvf/laurent_poly.hpp>
#include <hvf/ring_matrix.hpp>

namespace hvf::test
{

// Exact factorial by repeated multiplication (no GMP factorial routine).
inline Rational naive_factorial(long n)
{
    Rational out(1);
    for (long i = 2; i <= n; ++i) {
        out *= Rational(i);
    }
    return out;
}

// Binomial from Pascal's triangle.
inline Rational pascal_binomial(long n, long k)
{
    if (k < 0 || k > n) {
        return Rational(0);
    }
    std::vector<Rational> row{Rational(1)};
    for (long i = 1; i <= n; ++i) {
        std::vector<Rational> next(static_cast<std::size_t>(i) + 1, Rational(0));
        for (long j = 0; j <= i; ++j) {
            if (j > 0) {
                next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
            }
            if (j < i) {
                next[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
            }
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

inline Rational naive_bracket(long r, long l, long m)
{
    return naive_factorial(m + l) * naive_factorial(r - l) / (naive_factorial(m) * naive_factorial(r));
}

// Random element over the given symbols: z exponents in [-2, 2], others in [0, 2].
inline LaurentPoly random_poly(std::mt19937_64 &rng, const SymbolSetPtr &syms, const std::vector<std::string> &use,
                               int max_terms = 4)
{
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> z_exp(-2, 2);
    std::uniform_int_distribution<int> exp(0, 2);
    LaurentPoly out(syms);
    const int n = n_terms(rng);
    for (int t = 0; t < n; ++t) {
        LaurentPoly::Exponents e(syms->size(), 0);
        for (const auto &name : use) {
            e[syms->index_of(name)] = name == "z" ? z_exp(rng) : exp(rng);
        }
        out += LaurentPoly::monomial(syms, e, Rational(num(rng), den(rng)));
    }
    return out;
}

// Random polynomial (non-negative exponents) for determinant tests.
inline LaurentPoly random_polynomial(std::mt19937_64 &rng, const SymbolSetPtr &syms,
                                     const std::vector<std::string> &use)
{
    std::uniform_int_distribution<int> n_terms(0, 2);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> exp(0, 1);
    LaurentPoly out(syms);
    const int n = n_terms(rng);
    for (int t = 0; t < n; ++t) {
        LaurentPoly::Exponents e(syms->size(), 0);
        for (const auto &name : use) {
            e[syms->index_of(name)] = exp(rng);
        }
        out += LaurentPoly::monomial(syms, e, Rational(num(rng)));
    }
    return out;
}

// det by Laplace expansion along the first row.
inline LaurentPoly laplace_det(const RingMatrix &m)
{
    const std::size_t n = m.rows();
    if (n == 1) {
        return m(0, 0);
    }
    LaurentPoly out(m.symbols());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) {
            continue;
        }
        RingMatrix minor(m.symbols(), n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) {
                    minor(i - 1, c++) = m(i, k);
                }
            }
        }
        const LaurentPoly term = m(0, j) * laplace_det(minor);
        if (j % 2 == 0) {
            out += term;
        } else {
            out -= term;
        }
    }
    return out;
}

inline LaurentPoly laplace_char_poly(const RingMatrix &m)
{
    RingMatrix xi = m;
    const LaurentPoly X = LaurentPoly::variable(m.symbols(), "X");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            xi(i, j) = (i == j ? X : LaurentPoly(m.symbols())) - m(i, j);
        }
    }
    return laplace_det(xi);
}

} // namespace hvf::test

#endif
