#include <hvf/vector_form.hpp>

#include <sstream>
#include <stdexcept>

#include <hvf/combinatorics.hpp>

namespace hvf
{

namespace
{

LaurentPoly sign_power(const LaurentPoly &p, int e)
{
    return (e % 2 == 0) ? p : -p;
}

CheckRecord compare(std::string name, const SymbolicForm &form, std::optional<int> index, const LaurentPoly &lhs,
                    const LaurentPoly &rhs)
{
    CheckRecord rec;
    rec.name = std::move(name);
    rec.subject = form.spec().label();
    rec.index = index;
    rec.pass = poly_equal(lhs, rhs);
    if (!rec.pass) {
        rec.detail = "lhs - rhs = " + (lhs - rhs).to_string();
    }
    return rec;
}

CheckRecord compare_vectors(std::string name, const SymbolicForm &form, const std::vector<LaurentPoly> &lhs,
                            const std::vector<LaurentPoly> &rhs)
{
    CheckRecord rec;
    rec.name = std::move(name);
    rec.subject = form.spec().label();
    rec.pass = lhs.size() == rhs.size();
    std::ostringstream diff;
    for (std::size_t i = 0; rec.pass && i < lhs.size(); ++i) {
        if (!poly_equal(lhs[i], rhs[i])) {
            rec.pass = false;
            diff << "component " << i << ": lhs - rhs = " << (lhs[i] - rhs[i]);
        }
    }
    if (lhs.size() != rhs.size()) {
        diff << "length mismatch";
    }
    rec.detail = diff.str();
    return rec;
}

} // namespace

std::string FormSpecSymbolic::label() const
{
    std::ostringstream os;
    os << "w=" << weight << " r=" << depth << " present={";
    bool first = true;
    for (int k : present) {
        os << (first ? "" : ",") << k;
        first = false;
    }
    os << "}";
    return os.str();
}

void validate(const FormSpecSymbolic &spec)
{
    if (spec.mu < 3) {
        throw std::invalid_argument("mu must be at least 3");
    }
    if (spec.weight < 2 || spec.weight % 2 != 0) {
        throw std::invalid_argument("weight must be an even integer >= 2");
    }
    if (spec.depth < 0 || 2 * spec.depth > spec.weight) {
        throw std::invalid_argument("depth must satisfy 0 <= r <= w/2");
    }
    for (int k : spec.present) {
        if (k < 0 || k > spec.depth) {
            throw std::invalid_argument("coefficient index " + std::to_string(k) + " outside 0..r");
        }
        if (spec.weight - 2 * k < 0) {
            throw std::invalid_argument("coefficient index " + std::to_string(k) + " has negative weight");
        }
    }
}

SymbolicForm::SymbolicForm(FormSpecSymbolic spec) : m_spec(std::move(spec))
{
    validate(m_spec);
    m_syms = SymbolSet::standard(m_spec.depth);
    for (int l = 0; l <= m_spec.depth; ++l) {
        m_g.push_back(build_g(l));
    }
}

LaurentPoly SymbolicForm::var(std::string_view name, int exponent) const
{
    return LaurentPoly::variable(m_syms, name, exponent);
}

LaurentPoly SymbolicForm::constant(const Rational &c) const
{
    return LaurentPoly(m_syms, c);
}

LaurentPoly SymbolicForm::coefficient(int k) const
{
    if (!m_spec.present.count(k)) {
        return constant(0);
    }
    if (m_spec.unit_constant_slot && m_spec.weight == 2 * k) {
        return constant(1);
    }
    return var("B" + std::to_string(k));
}

LaurentPoly SymbolicForm::build_g(int l) const
{
    const int r = m_spec.depth;
    if (l < 0 || l > r) {
        throw std::out_of_range("hauptbuch index out of range");
    }
    if (static_cast<std::size_t>(l) < m_g.size()) {
        return m_g[static_cast<std::size_t>(l)];
    }
    const LaurentPoly E = var("E");
    LaurentPoly sum(m_syms);
    for (int m = 0; m <= r - l; ++m) {
        const LaurentPoly b = coefficient(l + m);
        if (!b.is_zero()) {
            sum += bracket(r, l, m) * (b * pow(E, m));
        }
    }
    return pow(var("C"), l) * sum;
}

LaurentPoly SymbolicForm::build_f(int n) const
{
    if (n < 0 || n > m_spec.depth) {
        throw std::out_of_range("vector-form index out of range");
    }
    const LaurentPoly z = var("z");
    LaurentPoly sum(m_syms);
    for (int k = 0; k <= n; ++k) {
        sum += binomial(n, k) * (build_g(k) * pow(z, n - k));
    }
    return sum;
}

Hauptbuch SymbolicForm::hauptbuch() const
{
    return Hauptbuch{m_g};
}

VectorForm SymbolicForm::vector_form() const
{
    VectorForm out;
    for (int n = 0; n <= m_spec.depth; ++n) {
        out.entries.push_back(build_f(n));
    }
    return out;
}

TransferMatrix SymbolicForm::transfer_matrix() const
{
    const auto n = static_cast<std::size_t>(m_spec.depth) + 1;
    RingMatrix p(m_syms, n, n);
    for (int i = 0; i <= m_spec.depth; ++i) {
        for (int k = 0; k <= i; ++k) {
            p(i, k) = binomial(i, k) * m_g[static_cast<std::size_t>(i - k)];
        }
    }
    return TransferMatrix{std::move(p)};
}

RingMatrix SymbolicForm::monomial_vector() const
{
    return hvf::monomial_vector(m_syms, m_spec.depth);
}

RingMatrix monomial_vector(const SymbolSetPtr &syms, int r)
{
    std::vector<LaurentPoly> entries;
    for (int j = 0; j <= r; ++j) {
        entries.push_back(LaurentPoly::variable(syms, "z", j));
    }
    return RingMatrix::column(entries);
}

RingHom SymbolicForm::sigma_S() const
{
    const LaurentPoly z = var("z");
    RingHom h(m_syms);
    h.set("z", -var("z", -1));
    h.set("E", z * z * var("E") + var("C") * z);
    for (int k = 0; k <= m_spec.depth; ++k) {
        const std::string b = "B" + std::to_string(k);
        h.set(b, pow(z, m_spec.weight - 2 * k) * var(b));
    }
    return h;
}

RingHom SymbolicForm::sigma_T() const
{
    RingHom h(m_syms);
    h.set("z", var("z") + var("varpi"));
    return h;
}

VectorForm vector_form_by_exponential(const SymbolicForm &form)
{
    const int r = form.depth();
    const RingMatrix exp_za = nilpotent_exp(form.var("z") * creation(form.symbols(), r), static_cast<unsigned>(r) + 1);
    return VectorForm{(exp_za * RingMatrix::column(form.hauptbuch().entries)).column_entries()};
}

VectorForm vector_form_by_transfer(const SymbolicForm &form)
{
    return VectorForm{(form.transfer_matrix().matrix * form.monomial_vector()).column_entries()};
}

VectorForm vector_form_by_pascal(const SymbolicForm &form)
{
    return VectorForm{(pascal(form.depth(), form.var("z")) * RingMatrix::column(form.hauptbuch().entries))
                          .column_entries()};
}

std::vector<CheckRecord> verify_prop_gS(const SymbolicForm &form)
{
    const int w = form.weight();
    const int r = form.depth();
    const RingHom s = form.sigma_S();
    const LaurentPoly z = form.var("z");
    std::vector<CheckRecord> out;
    for (int l = 0; l <= r; ++l) {
        const LaurentPoly lhs = s(form.build_g(l));
        LaurentPoly sum(form.symbols());
        for (int m = 0; m <= r - l; ++m) {
            sum += binomial(r - l, m) * (form.build_g(l + m) * pow(z, r - l - m));
        }
        out.push_back(compare("prop_g_under_S", form, l, lhs, pow(z, w - r - l) * sum));
    }
    return out;
}

std::vector<CheckRecord> verify_cor_fS(const SymbolicForm &form)
{
    const int w = form.weight();
    const int r = form.depth();
    const RingHom s = form.sigma_S();
    const LaurentPoly z = form.var("z");
    const LaurentPoly sz = -form.var("z", -1);
    const LaurentPoly scale = form.var("z", -(w - r));
    std::vector<CheckRecord> out;
    for (int n = 0; n <= r; ++n) {
        // f-form: f_n(Sz) = z^(w-r) (-1)^n f_{r-n}(z)
        out.push_back(compare("cor_f_under_S", form, n, s(form.build_f(n)),
                              sign_power(pow(z, w - r) * form.build_f(r - n), n)));

        // Convolution form, with the binomial C(r-n, m) on the right.
        LaurentPoly lhs(form.symbols());
        for (int l = 0; l <= n; ++l) {
            lhs += binomial(n, l) * (s(form.build_g(l)) * pow(sz, n - l));
        }
        lhs *= scale;
        LaurentPoly rhs(form.symbols());
        for (int m = 0; m <= r - n; ++m) {
            rhs += binomial(r - n, m) * (form.build_g(m) * pow(z, r - n - m));
        }
        out.push_back(compare("cor_convolution_under_S", form, n, lhs, sign_power(rhs, n)));
    }
    return out;
}

std::vector<CheckRecord> verify_thm_T(const SymbolicForm &form)
{
    const int r = form.depth();
    const RingHom t = form.sigma_T();
    std::vector<LaurentPoly> lhs;
    for (const auto &f : form.vector_form().entries) {
        lhs.push_back(t(f));
    }
    const RingMatrix exp_wa =
        nilpotent_exp(form.var("varpi") * creation(form.symbols(), r), static_cast<unsigned>(r) + 1);
    const auto rhs = (exp_wa * RingMatrix::column(form.vector_form().entries)).column_entries();
    return {compare_vectors("thm_F_under_T", form, lhs, rhs)};
}

std::vector<CheckRecord> verify_thm_S(const SymbolicForm &form)
{
    const int w = form.weight();
    const int r = form.depth();
    const RingHom s = form.sigma_S();
    std::vector<LaurentPoly> lhs;
    for (const auto &f : form.vector_form().entries) {
        lhs.push_back(s(f));
    }
    const RingMatrix dy = half_transpose(Side::right, alternating_diagonal(form.symbols(), r));
    const auto rhs = (form.var("z", w - r) * (dy * RingMatrix::column(form.vector_form().entries))).column_entries();
    return {compare_vectors("thm_F_under_S", form, lhs, rhs)};
}

std::vector<CheckRecord> verify_orthogonality(const SymbolicForm &form)
{
    const int r = form.depth();
    std::vector<CheckRecord> out;
    for (int n = 0; n <= r; ++n) {
        const LaurentPoly lhs = form.build_g(n) * form.var("z", -n);
        LaurentPoly rhs(form.symbols());
        for (int j = 0; j <= n; ++j) {
            rhs += sign_power(binomial(n, j) * (form.build_f(j) * form.var("z", -j)), n - j);
        }
        out.push_back(compare("orthogonality", form, n, lhs, rhs));
    }
    return out;
}

std::vector<CheckRecord> verify_periodicity(const SymbolicForm &form)
{
    const RingHom t = form.sigma_T();
    std::vector<CheckRecord> out;
    const auto g = form.hauptbuch().entries;
    for (std::size_t l = 0; l < g.size(); ++l) {
        auto rec = compare("lemma_G_under_T", form, static_cast<int>(l), t(g[l]), g[l]);
        if (g[l].contains("z")) {
            rec.pass = false;
            rec.detail = "hauptbuch entry depends on z";
        }
        out.push_back(std::move(rec));
    }
    const RingMatrix p = form.transfer_matrix().matrix;
    RingMatrix pt = p;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        for (std::size_t j = 0; j < p.cols(); ++j) {
            pt(i, j) = t(p(i, j));
        }
    }
    CheckRecord rec;
    rec.name = "cor_P_under_T";
    rec.subject = form.spec().label();
    rec.pass = pt == p;
    if (!rec.pass) {
        rec.detail = "transfer matrix not fixed by T";
    }
    out.push_back(std::move(rec));
    return out;
}

std::vector<CheckRecord> verify_routes(const SymbolicForm &form)
{
    const auto direct = form.vector_form().entries;
    return {compare_vectors("route_exponential", form, direct, vector_form_by_exponential(form).entries),
            compare_vectors("route_transfer", form, direct, vector_form_by_transfer(form).entries),
            compare_vectors("matrix_convolution", form, direct, vector_form_by_pascal(form).entries)};
}

std::vector<CheckRecord> verify_double_S(const SymbolicForm &form)
{
    const int w = form.weight();
    const int r = form.depth();
    const RingHom s = form.sigma_S();
    std::vector<CheckRecord> out;
    for (int n = 0; n <= r; ++n) {
        const LaurentPoly f = form.build_f(n);
        out.push_back(compare("double_S", form, n, s(s(f)), sign_power(sign_power(f, w - r), r)));
    }
    return out;
}

std::vector<CheckRecord> verify_all(const SymbolicForm &form)
{
    std::vector<CheckRecord> out;
    auto add = [&out](std::vector<CheckRecord> v) {
        for (auto &c : v) {
            out.push_back(std::move(c));
        }
    };
    add(verify_prop_gS(form));
    add(verify_cor_fS(form));
    add(verify_thm_T(form));
    add(verify_thm_S(form));
    add(verify_orthogonality(form));
    add(verify_periodicity(form));
    add(verify_routes(form));
    add(verify_double_S(form));
    return out;
}

} // namespace hvf
