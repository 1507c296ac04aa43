#ifndef HVF_RATIONAL_HPP
#define HVF_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace hvf
{

/// Arbitrary-precision rational number in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : m_value(value) {}
    Rational(long num, long den);
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(mpq_class value);

    static Rational from_string(const std::string &text);

    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_one() const { return m_value == 1; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    double to_double() const { return m_value.get_d(); }
    std::string to_string() const { return m_value.get_str(); }

    const mpq_class &raw() const { return m_value; }

    Rational operator-() const { return Rational(mpq_class(-m_value)); }

    Rational &operator+=(const Rational &other);
    Rational &operator-=(const Rational &other);
    Rational &operator*=(const Rational &other);
    Rational &operator/=(const Rational &other);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &q) { return os << q.to_string(); }

private:
    mpq_class m_value;
};

/// n! as an exact rational. Throws std::domain_error for n < 0.
Rational factorial(long n);

} // namespace hvf

#endif
