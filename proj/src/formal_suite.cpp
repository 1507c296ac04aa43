#include <hvf/formal_suite.hpp>

#include <string>

#include <hvf/combinatorics.hpp>
#include <hvf/ring_matrix.hpp>

namespace hvf
{

namespace
{

CheckRecord record(std::string name, std::string subject, bool pass, std::string detail = {})
{
    CheckRecord c;
    c.name = std::move(name);
    c.subject = std::move(subject);
    c.pass = pass;
    c.detail = std::move(detail);
    return c;
}

std::string tuple_label(std::initializer_list<std::pair<const char *, long>> items)
{
    std::string out;
    for (const auto &[k, v] : items) {
        if (!out.empty()) {
            out += ' ';
        }
        out += k;
        out += '=';
        out += std::to_string(v);
    }
    return out;
}

} // namespace

std::vector<FormSpecSymbolic> spec_grid(int w_max)
{
    std::vector<FormSpecSymbolic> out;
    for (int w = 2; w <= w_max; w += 2) {
        for (int r = 0; 2 * r <= w; ++r) {
            for (unsigned mask = 0; mask < (1u << (r + 1)); ++mask) {
                FormSpecSymbolic spec;
                spec.weight = w;
                spec.depth = r;
                for (int k = 0; k <= r; ++k) {
                    if (mask & (1u << k)) {
                        spec.present.insert(k);
                    }
                }
                out.push_back(std::move(spec));
            }
        }
    }
    return out;
}

Report run_combinatorics_suite(int r_max)
{
    Report rep;
    rep.suite = "combinatorics";
    for (long r = 0; r <= r_max; ++r) {
        for (long l = 0; l <= r; ++l) {
            for (long m = 0; l + m <= r; ++m) {
                for (long p = 0; l + m + p <= r; ++p) {
                    rep.checks.push_back(record("bracket_identity",
                                                tuple_label({{"r", r}, {"l", l}, {"m", m}, {"p", p}}),
                                                check_coeff_equiv(r, l, m, p)));
                }
            }
        }
    }
    for (long r = 0; r <= r_max; ++r) {
        for (long n = 0; n <= r; ++n) {
            for (long m = 0; m <= r; ++m) {
                const auto [lhs, rhs] = vandermonde_collapse(n, r, m);
                rep.checks.push_back(record("vandermonde_collapse", tuple_label({{"n", n}, {"r", r}, {"m", m}}),
                                            lhs == rhs,
                                            lhs == rhs ? "" : lhs.to_string() + " != " + rhs.to_string()));
            }
        }
    }
    return rep;
}

Report run_matrix_suite(const MatrixSuiteBounds &bounds)
{
    Report rep;
    rep.suite = "matrix";
    const auto syms = SymbolSet::standard(0);
    const LaurentPoly x = LaurentPoly::variable(syms, "x");
    const LaurentPoly y = LaurentPoly::variable(syms, "y");
    const LaurentPoly z = LaurentPoly::variable(syms, "z");
    const LaurentPoly lambda = LaurentPoly::variable(syms, "lambda");
    const LaurentPoly X = LaurentPoly::variable(syms, "X");

    for (int r = 0; r <= bounds.pascal_max; ++r) {
        rep.checks.push_back(record("pascal_addition", tuple_label({{"r", r}}),
                                    pascal(r, x) * pascal(r, y) == pascal(r, x + y)));
    }
    for (int r = 0; r <= bounds.nilpotent_max; ++r) {
        const RingMatrix a = creation(syms, r);
        const bool below = !matrix_pow(a, static_cast<unsigned>(r)).is_zero();
        const bool at = matrix_pow(a, static_cast<unsigned>(r) + 1).is_zero();
        rep.checks.push_back(record("creation_nilpotent_index", tuple_label({{"r", r}}), below && at,
                                    below && at ? "" : "nilpotency index differs from r+1"));
    }
    for (int r = 0; r <= bounds.exp_max; ++r) {
        rep.checks.push_back(record("exp_equals_pascal", tuple_label({{"r", r}}),
                                    nilpotent_exp(z * creation(syms, r), static_cast<unsigned>(r) + 1) ==
                                        pascal(r, z)));
    }
    for (int r = 0; r <= bounds.exchange_max; ++r) {
        const RingMatrix iota = exchange(syms, r);
        rep.checks.push_back(record("exchange_involution", tuple_label({{"r", r}}),
                                    iota * iota == RingMatrix::identity(syms, static_cast<std::size_t>(r) + 1)));
    }
    for (int r = 0; r <= bounds.char_poly_max; ++r) {
        const LaurentPoly cp = char_poly(creation(r, lambda));
        const LaurentPoly expected = pow(X - lambda, r + 1);
        rep.checks.push_back(record("char_poly_creation", tuple_label({{"r", r}}), cp == expected,
                                    cp == expected ? "" : "got " + cp.to_string()));
    }
    rep.notes.push_back("char_poly(A_r(lambda)) is checked against (X - lambda)^(r+1); the printed form "
                        "'sum C(r,k) X^(r-k) lambda^k = (X - lambda)^r' has the wrong degree for an (r+1)x(r+1) "
                        "matrix and its sum expands to (X + lambda)^r");
    return rep;
}

Report run_identity_suite(int w_max)
{
    Report rep;
    rep.suite = "identities";
    for (const auto &spec : spec_grid(w_max)) {
        rep.append(verify_all(SymbolicForm(spec)));
    }
    return rep;
}

} // namespace hvf
