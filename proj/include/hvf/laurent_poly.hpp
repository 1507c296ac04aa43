#ifndef HVF_LAURENT_POLY_HPP
#define HVF_LAURENT_POLY_HPP

#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <hvf/rational.hpp>

namespace hvf
{

class SymbolSet;
using SymbolSetPtr = std::shared_ptr<const SymbolSet>;

// Closed, ordered set of generator names for one verification session.
//
// Accepted names are "z", "varpi", "C", "E", "lambda", "X", "x", "y" and
// "B<k>" for k >= 0. The symbol "z" is distinguished: it is the only one
// allowed to carry negative exponents. The registration order fixes the
// monomial ordering.
class SymbolSet
{
public:
    static SymbolSetPtr create(std::vector<std::string> names);
    // z, varpi, C, E, B0..B<max_b>, lambda, X, x, y
    static SymbolSetPtr standard(int max_b);

    std::size_t size() const { return m_names.size(); }
    const std::string &name(std::size_t i) const { return m_names.at(i); }
    const std::vector<std::string> &names() const { return m_names; }

    std::optional<std::size_t> find(std::string_view name) const;
    // Throws std::invalid_argument("unknown symbol: ...") for unregistered names.
    std::size_t index_of(std::string_view name) const;
    std::optional<std::size_t> laurent_index() const { return m_laurent; }

    friend bool operator==(const SymbolSet &a, const SymbolSet &b) { return a.m_names == b.m_names; }

private:
    explicit SymbolSet(std::vector<std::string> names);

    std::vector<std::string> m_names;
    std::unordered_map<std::string, std::size_t> m_index;
    std::optional<std::size_t> m_laurent;
};

bool compatible(const SymbolSetPtr &a, const SymbolSetPtr &b);

/// Multivariate polynomial with exact rational coefficients, Laurent in the
/// distinguished symbol z.
///
/// Terms live in a map keyed by exponent vectors under graded lexicographic
/// order, and zero coefficients are never stored, so two values are equal
/// exactly when their term maps are equal.
class LaurentPoly
{
public:
    using Exponents = std::vector<int>;

    struct GradedLex {
        bool operator()(const Exponents &a, const Exponents &b) const;
    };
    using TermMap = std::map<Exponents, Rational, GradedLex>;

    explicit LaurentPoly(SymbolSetPtr syms);
    LaurentPoly(SymbolSetPtr syms, const Rational &c);

    static LaurentPoly variable(SymbolSetPtr syms, std::string_view name, int exponent = 1);
    static LaurentPoly monomial(SymbolSetPtr syms, Exponents exps, const Rational &c);

    const SymbolSetPtr &symbols() const { return m_syms; }
    const TermMap &terms() const { return m_terms; }
    std::size_t size() const { return m_terms.size(); }
    bool is_zero() const { return m_terms.empty(); }
    bool is_constant() const;
    // True iff some stored term has a non-zero exponent of the named symbol.
    bool contains(std::string_view name) const;
    // No negative exponents anywhere.
    bool is_polynomial() const;
    // Largest exponent of the named symbol over all terms (0 for the zero poly).
    int degree_in(std::string_view name) const;
    int min_degree_in(std::string_view name) const;
    // Single-term view: (coefficient, exponents).
    std::optional<std::pair<Rational, Exponents>> as_monomial() const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &other);
    LaurentPoly &operator-=(const LaurentPoly &other);
    LaurentPoly &operator*=(const LaurentPoly &other);
    LaurentPoly &operator*=(const Rational &c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational &c) { return a *= c; }
    friend LaurentPoly operator*(const Rational &c, LaurentPoly a) { return a *= c; }
    friend LaurentPoly operator+(LaurentPoly a, const Rational &c);
    friend LaurentPoly operator-(LaurentPoly a, const Rational &c);

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const LaurentPoly &p) { return os << p.to_string(); }

private:
    void check_compatible(const LaurentPoly &other) const;
    void add_term(const Exponents &e, const Rational &c);

    SymbolSetPtr m_syms;
    TermMap m_terms;
};

// Throws std::invalid_argument("unsupported exponent") when e < 0.
LaurentPoly pow(const LaurentPoly &base, long e);

// Inverse of c * z^k; anything else throws std::domain_error("non-invertible image").
LaurentPoly invert_monomial(const LaurentPoly &p);

// Exact equality of canonical forms.
inline bool poly_equal(const LaurentPoly &a, const LaurentPoly &b) { return a == b; }

// Numeric value with values[i] assigned to symbol i.
std::complex<double> evaluate(const LaurentPoly &p, std::span<const std::complex<double>> values);

// Convenience: values by name, every symbol occurring in p must be bound.
std::complex<double> evaluate(const LaurentPoly &p,
                              const std::map<std::string, std::complex<double>> &values);

/// Ring homomorphism given by symbol images; unmapped symbols are fixed.
class RingHom
{
public:
    explicit RingHom(SymbolSetPtr syms);

    RingHom &set(std::string_view name, LaurentPoly image);
    const LaurentPoly *image(std::string_view name) const;
    const SymbolSetPtr &symbols() const { return m_syms; }

    LaurentPoly operator()(const LaurentPoly &p) const;

private:
    SymbolSetPtr m_syms;
    std::map<std::size_t, LaurentPoly> m_images;
};

inline LaurentPoly substitute(const RingHom &h, const LaurentPoly &p) { return h(p); }

} // namespace hvf

#endif
