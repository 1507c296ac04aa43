#include <hvf/rational.hpp>

#include <stdexcept>

namespace hvf
{

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational::Rational(mpq_class value) : m_value(std::move(value))
{
    if (m_value.get_den() == 0) {
        throw std::domain_error("zero denominator");
    }
    m_value.canonicalize();
}

Rational Rational::from_string(const std::string &text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rational(std::move(q));
}

Rational &Rational::operator+=(const Rational &other)
{
    m_value += other.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &other)
{
    m_value -= other.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &other)
{
    m_value *= other.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &other)
{
    if (other.is_zero()) {
        throw std::domain_error("division by zero");
    }
    m_value /= other.m_value;
    return *this;
}

Rational factorial(long n)
{
    if (n < 0) {
        throw std::domain_error("factorial of a negative integer");
    }
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(out, mpz_class(1));
}

} // namespace hvf
