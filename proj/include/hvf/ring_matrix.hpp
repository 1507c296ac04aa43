#ifndef HVF_RING_MATRIX_HPP
#define HVF_RING_MATRIX_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <hvf/laurent_poly.hpp>

namespace hvf
{

/// Dense row-major matrix with LaurentPoly entries.
class RingMatrix
{
public:
    // Zero matrix; rows and cols must be positive.
    RingMatrix(SymbolSetPtr syms, std::size_t rows, std::size_t cols);

    static RingMatrix identity(SymbolSetPtr syms, std::size_t n);
    static RingMatrix column(const std::vector<LaurentPoly> &entries);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool is_square() const { return m_rows == m_cols; }
    const SymbolSetPtr &symbols() const { return m_syms; }

    const LaurentPoly &operator()(std::size_t i, std::size_t j) const { return m_entries[i * m_cols + j]; }
    LaurentPoly &operator()(std::size_t i, std::size_t j) { return m_entries[i * m_cols + j]; }
    const LaurentPoly &at(std::size_t i, std::size_t j) const;

    bool is_zero() const;
    bool is_lower_triangular() const;
    RingMatrix transpose() const;
    // Column j as a vector of entries.
    std::vector<LaurentPoly> column_entries(std::size_t j = 0) const;

    RingMatrix &operator+=(const RingMatrix &other);
    RingMatrix &operator-=(const RingMatrix &other);
    RingMatrix &operator*=(const LaurentPoly &scalar);
    RingMatrix &operator*=(const Rational &scalar);

    friend RingMatrix operator+(RingMatrix a, const RingMatrix &b) { return a += b; }
    friend RingMatrix operator-(RingMatrix a, const RingMatrix &b) { return a -= b; }
    friend RingMatrix operator*(const RingMatrix &a, const RingMatrix &b);
    friend RingMatrix operator*(const LaurentPoly &s, RingMatrix m) { return m *= s; }
    friend RingMatrix operator*(RingMatrix m, const Rational &s) { return m *= s; }
    friend RingMatrix operator*(const Rational &s, RingMatrix m) { return m *= s; }

    friend bool operator==(const RingMatrix &a, const RingMatrix &b);

private:
    std::size_t m_rows;
    std::size_t m_cols;
    SymbolSetPtr m_syms;
    std::vector<LaurentPoly> m_entries;
};

RingMatrix matrix_pow(const RingMatrix &m, unsigned s);

// Generalized Pascal matrix: entry (n, k) = C(n, k) x^(n-k) for n >= k.
RingMatrix pascal(int r, const LaurentPoly &x);

// Creation matrix A_r(lambda): lambda on the diagonal, 1..r on the subdiagonal.
RingMatrix creation(int r, const LaurentPoly &lambda);
RingMatrix creation(SymbolSetPtr syms, int r);

// sum_{n < s} M^n / n! where s <= bound is the first power with M^s = 0.
// Throws std::domain_error("not nilpotent") if M^bound != 0.
RingMatrix nilpotent_exp(const RingMatrix &m, unsigned bound);

// Anti-diagonal permutation of size r + 1.
RingMatrix exchange(SymbolSetPtr syms, int r);

enum class Side { left, right };

// left: exchange * M (the x half-transpose); right: M * exchange (the y one).
RingMatrix half_transpose(Side side, const RingMatrix &m);

// Square diagonal matrix; throws std::invalid_argument on an empty list.
RingMatrix diagonal(const std::vector<LaurentPoly> &values);

// Diagonal with alternating signs (1, -1, 1, ...) of size r + 1.
RingMatrix alternating_diagonal(SymbolSetPtr syms, int r);

// det(X I - M) by the division-free Berkowitz recursion. The symbol X must
// be registered; entries must be polynomials (no negative exponents) and
// must not involve X.
LaurentPoly char_poly(const RingMatrix &m);

// Aligned text grid; zero entries are left blank.
std::string format_grid(const RingMatrix &m);

} // namespace hvf

#endif
