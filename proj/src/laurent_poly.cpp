#include <hvf/laurent_poly.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hvf
{

namespace
{

bool is_allowed_name(const std::string &name)
{
    static const char *fixed[] = {"z", "varpi", "C", "E", "lambda", "X", "x", "y"};
    for (const char *f : fixed) {
        if (name == f) {
            return true;
        }
    }
    if (name.size() >= 2 && name[0] == 'B') {
        return std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); });
    }
    return false;
}

long total_degree(const LaurentPoly::Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0L);
}

std::complex<double> ipow(std::complex<double> base, int e)
{
    if (e < 0) {
        return 1.0 / ipow(base, -e);
    }
    std::complex<double> out{1.0, 0.0};
    while (e > 0) {
        if (e & 1) {
            out *= base;
        }
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace

SymbolSet::SymbolSet(std::vector<std::string> names) : m_names(std::move(names))
{
    for (std::size_t i = 0; i < m_names.size(); ++i) {
        if (!is_allowed_name(m_names[i])) {
            throw std::invalid_argument("symbol not in the registered alphabet: " + m_names[i]);
        }
        if (!m_index.emplace(m_names[i], i).second) {
            throw std::invalid_argument("duplicate symbol: " + m_names[i]);
        }
        if (m_names[i] == "z") {
            m_laurent = i;
        }
    }
}

SymbolSetPtr SymbolSet::create(std::vector<std::string> names)
{
    return SymbolSetPtr(new SymbolSet(std::move(names)));
}

SymbolSetPtr SymbolSet::standard(int max_b)
{
    std::vector<std::string> names{"z", "varpi", "C", "E"};
    for (int k = 0; k <= max_b; ++k) {
        names.push_back("B" + std::to_string(k));
    }
    for (const char *n : {"lambda", "X", "x", "y"}) {
        names.emplace_back(n);
    }
    return create(std::move(names));
}

std::optional<std::size_t> SymbolSet::find(std::string_view name) const
{
    auto it = m_index.find(std::string(name));
    if (it == m_index.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t SymbolSet::index_of(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw std::invalid_argument("unknown symbol: " + std::string(name));
}

bool compatible(const SymbolSetPtr &a, const SymbolSetPtr &b)
{
    return a == b || (a && b && *a == *b);
}

bool LaurentPoly::GradedLex::operator()(const Exponents &a, const Exponents &b) const
{
    const long da = total_degree(a);
    const long db = total_degree(b);
    if (da != db) {
        return da < db;
    }
    return a < b;
}

LaurentPoly::LaurentPoly(SymbolSetPtr syms) : m_syms(std::move(syms))
{
    if (!m_syms) {
        throw std::invalid_argument("null symbol set");
    }
}

LaurentPoly::LaurentPoly(SymbolSetPtr syms, const Rational &c) : LaurentPoly(std::move(syms))
{
    if (!c.is_zero()) {
        m_terms.emplace(Exponents(m_syms->size(), 0), c);
    }
}

LaurentPoly LaurentPoly::variable(SymbolSetPtr syms, std::string_view name, int exponent)
{
    Exponents e(syms->size(), 0);
    e[syms->index_of(name)] = exponent;
    return monomial(std::move(syms), std::move(e), Rational(1));
}

LaurentPoly LaurentPoly::monomial(SymbolSetPtr syms, Exponents exps, const Rational &c)
{
    LaurentPoly out(std::move(syms));
    if (exps.size() != out.m_syms->size()) {
        throw std::invalid_argument("exponent vector length does not match symbol set");
    }
    const auto z = out.m_syms->laurent_index();
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0 && (!z || *z != i)) {
            throw std::domain_error("negative exponent on non-Laurent symbol " + out.m_syms->name(i));
        }
    }
    if (!c.is_zero()) {
        out.m_terms.emplace(std::move(exps), c);
    }
    return out;
}

bool LaurentPoly::is_constant() const
{
    if (m_terms.empty()) {
        return true;
    }
    if (m_terms.size() != 1) {
        return false;
    }
    const auto &e = m_terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool LaurentPoly::contains(std::string_view name) const
{
    const auto i = m_syms->find(name);
    if (!i) {
        return false;
    }
    return std::any_of(m_terms.begin(), m_terms.end(), [&](const auto &t) { return t.first[*i] != 0; });
}

bool LaurentPoly::is_polynomial() const
{
    return std::all_of(m_terms.begin(), m_terms.end(), [](const auto &t) {
        return std::all_of(t.first.begin(), t.first.end(), [](int x) { return x >= 0; });
    });
}

int LaurentPoly::degree_in(std::string_view name) const
{
    const auto i = m_syms->index_of(name);
    if (m_terms.empty()) {
        return 0;
    }
    int out = m_terms.begin()->first[i];
    for (const auto &[e, c] : m_terms) {
        out = std::max(out, e[i]);
    }
    return out;
}

int LaurentPoly::min_degree_in(std::string_view name) const
{
    const auto i = m_syms->index_of(name);
    if (m_terms.empty()) {
        return 0;
    }
    int out = m_terms.begin()->first[i];
    for (const auto &[e, c] : m_terms) {
        out = std::min(out, e[i]);
    }
    return out;
}

std::optional<std::pair<Rational, LaurentPoly::Exponents>> LaurentPoly::as_monomial() const
{
    if (m_terms.size() != 1) {
        return std::nullopt;
    }
    const auto &[e, c] = *m_terms.begin();
    return std::make_pair(c, e);
}

void LaurentPoly::check_compatible(const LaurentPoly &other) const
{
    if (!compatible(m_syms, other.m_syms)) {
        throw std::invalid_argument("symbol set mismatch");
    }
}

void LaurentPoly::add_term(const Exponents &e, const Rational &c)
{
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            m_terms.erase(it);
        }
    } else if (c.is_zero()) {
        m_terms.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out(*this);
    for (auto &[e, c] : out.m_terms) {
        c = -c;
    }
    return out;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, c);
    }
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &other)
{
    check_compatible(other);
    for (const auto &[e, c] : other.m_terms) {
        add_term(e, -c);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    a.check_compatible(b);
    LaurentPoly out(a.m_syms);
    LaurentPoly::Exponents e(a.m_syms->size());
    for (const auto &[ea, ca] : a.m_terms) {
        for (const auto &[eb, cb] : b.m_terms) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            auto [it, inserted] = out.m_terms.try_emplace(e, ca);
            if (inserted) {
                it->second *= cb;
            } else {
                it->second += ca * cb;
            }
        }
    }
    std::erase_if(out.m_terms, [](const auto &t) { return t.second.is_zero(); });
    return out;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &other)
{
    *this = *this * other;
    return *this;
}

LaurentPoly &LaurentPoly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_terms.clear();
        return *this;
    }
    for (auto &[e, v] : m_terms) {
        v *= c;
    }
    return *this;
}

LaurentPoly operator+(LaurentPoly a, const Rational &c)
{
    a.add_term(LaurentPoly::Exponents(a.m_syms->size(), 0), c);
    return a;
}

LaurentPoly operator-(LaurentPoly a, const Rational &c)
{
    a.add_term(LaurentPoly::Exponents(a.m_syms->size(), 0), -c);
    return a;
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b)
{
    a.check_compatible(b);
    return a.m_terms == b.m_terms;
}

std::string LaurentPoly::to_string() const
{
    if (m_terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
        const auto &[e, c] = *it;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (first) {
            os << (negative ? "-" : "");
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;

        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (any) {
                mono << '*';
            }
            mono << m_syms->name(i);
            if (e[i] != 1) {
                mono << '^' << e[i];
            }
            any = true;
        }
        if (!any) {
            os << mag;
        } else if (mag.is_one()) {
            os << mono.str();
        } else {
            os << mag << '*' << mono.str();
        }
    }
    return os.str();
}

LaurentPoly pow(const LaurentPoly &base, long e)
{
    if (e < 0) {
        throw std::invalid_argument("unsupported exponent");
    }
    LaurentPoly out(base.symbols(), Rational(1));
    LaurentPoly b = base;
    while (e > 0) {
        if (e & 1) {
            out *= b;
        }
        e >>= 1;
        if (e > 0) {
            b *= b;
        }
    }
    return out;
}

LaurentPoly invert_monomial(const LaurentPoly &p)
{
    const auto mono = p.as_monomial();
    const auto z = p.symbols()->laurent_index();
    if (!mono) {
        throw std::domain_error("non-invertible image");
    }
    auto [c, e] = *mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0 && (!z || i != *z)) {
            throw std::domain_error("non-invertible image");
        }
        e[i] = -e[i];
    }
    return LaurentPoly::monomial(p.symbols(), std::move(e), Rational(1) / c);
}

std::complex<double> evaluate(const LaurentPoly &p, std::span<const std::complex<double>> values)
{
    if (values.size() != p.symbols()->size()) {
        throw std::invalid_argument("value vector length does not match symbol set");
    }
    std::complex<double> sum{0.0, 0.0};
    for (const auto &[e, c] : p.terms()) {
        std::complex<double> term{c.to_double(), 0.0};
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) {
                term *= ipow(values[i], e[i]);
            }
        }
        sum += term;
    }
    return sum;
}

std::complex<double> evaluate(const LaurentPoly &p, const std::map<std::string, std::complex<double>> &values)
{
    const auto &syms = *p.symbols();
    std::vector<std::complex<double>> v(syms.size(), std::complex<double>{0.0, 0.0});
    for (std::size_t i = 0; i < syms.size(); ++i) {
        auto it = values.find(syms.name(i));
        if (it != values.end()) {
            v[i] = it->second;
        } else if (p.contains(syms.name(i))) {
            throw std::invalid_argument("no value bound for symbol " + syms.name(i));
        }
    }
    return evaluate(p, v);
}

RingHom::RingHom(SymbolSetPtr syms) : m_syms(std::move(syms)) {}

RingHom &RingHom::set(std::string_view name, LaurentPoly image)
{
    if (!compatible(m_syms, image.symbols())) {
        throw std::invalid_argument("symbol set mismatch");
    }
    m_images.insert_or_assign(m_syms->index_of(name), std::move(image));
    return *this;
}

const LaurentPoly *RingHom::image(std::string_view name) const
{
    auto it = m_images.find(m_syms->index_of(name));
    return it == m_images.end() ? nullptr : &it->second;
}

LaurentPoly RingHom::operator()(const LaurentPoly &p) const
{
    if (!compatible(m_syms, p.symbols())) {
        throw std::invalid_argument("symbol set mismatch");
    }
    // Powers of images are reused across terms.
    std::map<std::pair<std::size_t, int>, LaurentPoly> cache;
    auto power_of = [&](std::size_t i, int e) -> const LaurentPoly & {
        auto key = std::make_pair(i, e);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
        const LaurentPoly &img = m_images.at(i);
        LaurentPoly value = e >= 0 ? pow(img, e) : pow(invert_monomial(img), -e);
        return cache.emplace(key, std::move(value)).first->second;
    };

    LaurentPoly out(m_syms);
    for (const auto &[e, c] : p.terms()) {
        LaurentPoly::Exponents fixed(e.size(), 0);
        std::vector<std::pair<std::size_t, int>> mapped;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (m_images.count(i)) {
                mapped.emplace_back(i, e[i]);
            } else {
                fixed[i] = e[i];
            }
        }
        LaurentPoly term = LaurentPoly::monomial(m_syms, std::move(fixed), c);
        for (const auto &[i, k] : mapped) {
            term *= power_of(i, k);
        }
        out += term;
    }
    return out;
}

} // namespace hvf
