#include <hvf/ring_matrix.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <hvf/combinatorics.hpp>

namespace hvf
{

RingMatrix::RingMatrix(SymbolSetPtr syms, std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_syms(std::move(syms))
{
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    m_entries.assign(rows * cols, LaurentPoly(m_syms));
}

RingMatrix RingMatrix::identity(SymbolSetPtr syms, std::size_t n)
{
    RingMatrix out(syms, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = LaurentPoly(syms, Rational(1));
    }
    return out;
}

RingMatrix RingMatrix::column(const std::vector<LaurentPoly> &entries)
{
    if (entries.empty()) {
        throw std::invalid_argument("empty column");
    }
    RingMatrix out(entries.front().symbols(), entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out(i, 0) = entries[i];
    }
    return out;
}

const LaurentPoly &RingMatrix::at(std::size_t i, std::size_t j) const
{
    if (i >= m_rows || j >= m_cols) {
        throw std::out_of_range("matrix index out of range");
    }
    return (*this)(i, j);
}

bool RingMatrix::is_zero() const
{
    return std::all_of(m_entries.begin(), m_entries.end(), [](const LaurentPoly &p) { return p.is_zero(); });
}

bool RingMatrix::is_lower_triangular() const
{
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = i + 1; j < m_cols; ++j) {
            if (!(*this)(i, j).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

RingMatrix RingMatrix::transpose() const
{
    RingMatrix out(m_syms, m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

std::vector<LaurentPoly> RingMatrix::column_entries(std::size_t j) const
{
    std::vector<LaurentPoly> out;
    out.reserve(m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        out.push_back(at(i, j));
    }
    return out;
}

RingMatrix &RingMatrix::operator+=(const RingMatrix &other)
{
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw std::invalid_argument("matrix size mismatch");
    }
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        m_entries[i] += other.m_entries[i];
    }
    return *this;
}

RingMatrix &RingMatrix::operator-=(const RingMatrix &other)
{
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw std::invalid_argument("matrix size mismatch");
    }
    for (std::size_t i = 0; i < m_entries.size(); ++i) {
        m_entries[i] -= other.m_entries[i];
    }
    return *this;
}

RingMatrix &RingMatrix::operator*=(const LaurentPoly &scalar)
{
    for (auto &e : m_entries) {
        e *= scalar;
    }
    return *this;
}

RingMatrix &RingMatrix::operator*=(const Rational &scalar)
{
    for (auto &e : m_entries) {
        e *= scalar;
    }
    return *this;
}

RingMatrix operator*(const RingMatrix &a, const RingMatrix &b)
{
    if (a.m_cols != b.m_rows) {
        throw std::invalid_argument("matrix size mismatch");
    }
    RingMatrix out(a.m_syms, a.m_rows, b.m_cols);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
        for (std::size_t k = 0; k < a.m_cols; ++k) {
            const LaurentPoly &aik = a(i, k);
            if (aik.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_cols; ++j) {
                if (!b(k, j).is_zero()) {
                    out(i, j) += aik * b(k, j);
                }
            }
        }
    }
    return out;
}

bool operator==(const RingMatrix &a, const RingMatrix &b)
{
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_entries == b.m_entries;
}

RingMatrix matrix_pow(const RingMatrix &m, unsigned s)
{
    if (!m.is_square()) {
        throw std::invalid_argument("matrix power of a non-square matrix");
    }
    RingMatrix out = RingMatrix::identity(m.symbols(), m.rows());
    for (unsigned i = 0; i < s; ++i) {
        out = out * m;
    }
    return out;
}

RingMatrix pascal(int r, const LaurentPoly &x)
{
    if (r < 0) {
        throw std::invalid_argument("negative matrix order");
    }
    const auto n = static_cast<std::size_t>(r) + 1;
    RingMatrix out(x.symbols(), n, n);
    for (int i = 0; i <= r; ++i) {
        for (int k = 0; k <= i; ++k) {
            out(i, k) = binomial(i, k) * pow(x, i - k);
        }
    }
    return out;
}

RingMatrix creation(int r, const LaurentPoly &lambda)
{
    if (r < 0) {
        throw std::invalid_argument("negative matrix order");
    }
    const auto n = static_cast<std::size_t>(r) + 1;
    RingMatrix out(lambda.symbols(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = lambda;
        if (i > 0) {
            out(i, i - 1) = LaurentPoly(lambda.symbols(), Rational(static_cast<long>(i)));
        }
    }
    return out;
}

RingMatrix creation(SymbolSetPtr syms, int r)
{
    return creation(r, LaurentPoly(std::move(syms)));
}

RingMatrix nilpotent_exp(const RingMatrix &m, unsigned bound)
{
    if (!m.is_square()) {
        throw std::invalid_argument("matrix exponential of a non-square matrix");
    }
    if (bound == 0) {
        throw std::invalid_argument("nilpotency bound must be positive");
    }
    RingMatrix sum(m.symbols(), m.rows(), m.cols());
    RingMatrix power = RingMatrix::identity(m.symbols(), m.rows());
    Rational inv_fact(1);
    for (unsigned n = 0;; ++n) {
        if (power.is_zero()) {
            return sum;
        }
        if (n == bound) {
            throw std::domain_error("not nilpotent");
        }
        sum += power * inv_fact;
        power = power * m;
        inv_fact /= Rational(static_cast<long>(n) + 1);
    }
}

RingMatrix exchange(SymbolSetPtr syms, int r)
{
    if (r < 0) {
        throw std::invalid_argument("negative matrix order");
    }
    const auto n = static_cast<std::size_t>(r) + 1;
    RingMatrix out(syms, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, n - 1 - i) = LaurentPoly(syms, Rational(1));
    }
    return out;
}

RingMatrix half_transpose(Side side, const RingMatrix &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("half-transpose of a non-square matrix");
    }
    const RingMatrix iota = exchange(m.symbols(), static_cast<int>(m.rows()) - 1);
    return side == Side::left ? iota * m : m * iota;
}

RingMatrix diagonal(const std::vector<LaurentPoly> &values)
{
    if (values.empty()) {
        throw std::invalid_argument("diagonal needs at least one entry");
    }
    RingMatrix out(values.front().symbols(), values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out(i, i) = values[i];
    }
    return out;
}

RingMatrix alternating_diagonal(SymbolSetPtr syms, int r)
{
    std::vector<LaurentPoly> values;
    for (int i = 0; i <= r; ++i) {
        values.emplace_back(syms, Rational(i % 2 == 0 ? 1 : -1));
    }
    return diagonal(values);
}

LaurentPoly char_poly(const RingMatrix &m)
{
    if (!m.is_square()) {
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    }
    const auto &syms = m.symbols();
    const std::size_t x_index = syms->index_of("X");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_polynomial()) {
                throw std::domain_error("non-polynomial entries");
            }
            if (m(i, j).contains(syms->name(x_index))) {
                throw std::invalid_argument("matrix entries must not involve X");
            }
        }
    }

    const std::size_t n = m.rows();
    const LaurentPoly zero(syms);
    std::vector<LaurentPoly> v{LaurentPoly(syms, Rational(1))};
    for (std::size_t k = 1; k <= n; ++k) {
        // Leading k x k block split as [[prev, col], [row, a]].
        const std::size_t p = k - 1;
        std::vector<LaurentPoly> t(k + 1, zero);
        t[0] = LaurentPoly(syms, Rational(1));
        t[1] = -m(p, p);
        std::vector<LaurentPoly> w(p, zero);
        for (std::size_t i = 0; i < p; ++i) {
            w[i] = m(i, p);
        }
        for (std::size_t j = 0; j + 2 <= k; ++j) {
            LaurentPoly dot(syms);
            for (std::size_t i = 0; i < p; ++i) {
                dot += m(p, i) * w[i];
            }
            t[j + 2] = -dot;
            std::vector<LaurentPoly> next(p, zero);
            for (std::size_t i = 0; i < p; ++i) {
                for (std::size_t l = 0; l < p; ++l) {
                    if (!m(i, l).is_zero() && !w[l].is_zero()) {
                        next[i] += m(i, l) * w[l];
                    }
                }
            }
            w = std::move(next);
        }
        std::vector<LaurentPoly> nv(k + 1, zero);
        for (std::size_t i = 0; i <= k; ++i) {
            for (std::size_t j = 0; j < k && j <= i; ++j) {
                nv[i] += t[i - j] * v[j];
            }
        }
        v = std::move(nv);
    }

    LaurentPoly out(syms);
    for (std::size_t i = 0; i <= n; ++i) {
        out += v[i] * LaurentPoly::variable(syms, "X", static_cast<int>(n - i));
    }
    return out;
}

std::string format_grid(const RingMatrix &m)
{
    std::vector<std::string> cells(m.rows() * m.cols());
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto &e = m(i, j);
            auto &cell = cells[i * m.cols() + j];
            cell = e.is_zero() ? std::string() : e.to_string();
            width[j] = std::max(width[j], cell.size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::string line;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                line += "  ";
            }
            const auto &cell = cells[i * m.cols() + j];
            line += cell;
            line.append(width[j] - cell.size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        os << line << '\n';
    }
    return os.str();
}

} // namespace hvf
