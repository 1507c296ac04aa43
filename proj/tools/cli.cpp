#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <hvf/formal_suite.hpp>
#include <hvf/numeric_form.hpp>
#include <hvf/ring_matrix.hpp>
#include <hvf/vector_form.hpp>

namespace hvf::cli
{

namespace
{

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cplx parse_point(const std::string &text)
{
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    double re = 0.0;
    double im = 0.0;
    std::string rest;
    if (!(is >> re >> im) || (is >> rest)) {
        throw UsageError("point '" + text + "' must be 're,im'");
    }
    return {re, im};
}

void emit_report(const Report &rep, const std::string &format, const std::string &out_path, bool verbose,
                 std::ostream &out)
{
    std::ostringstream body;
    if (format == "json") {
        body << nlohmann::json(rep).dump(2) << '\n';
    } else {
        write_text(body, rep, verbose);
    }
    if (out_path.empty()) {
        out << body.str();
        return;
    }
    std::ofstream file(out_path);
    if (!file) {
        throw UsageError("cannot write '" + out_path + "'");
    }
    file << body.str();
    // keep the summary visible when the report goes to a file
    if (format == "json") {
        out << "total " << rep.checks.size() << " checks, " << rep.failures() << " failed\n";
    }
}

std::set<int> parse_present(const std::string &text)
{
    std::set<int> out;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    int k = 0;
    while (is >> k) {
        out.insert(k);
    }
    if (!is.eof()) {
        throw UsageError("present list '" + text + "' must be comma-separated integers");
    }
    return out;
}

QSeries named_series(const std::string &name, std::size_t terms)
{
    if (name == "E2" || name == "E4" || name == "E6") {
        return eisenstein_mu3(name[1] - '0', terms);
    }
    if (name == "DE2" || name == "DE4" || name == "DE6") {
        return eisenstein_mu3(name[2] - '0', terms).derive();
    }
    throw UsageError("unknown series '" + name + "' (expected E2, E4, E6, DE2, DE4 or DE6)");
}

NumericFormSpec find_builtin(const std::string &name, std::size_t terms)
{
    for (auto &s : builtin_samples(terms)) {
        if (s.name == name) {
            return s;
        }
    }
    throw UsageError("unknown builtin sample '" + name + "' (expected E2, E2^2, DE4, DE6 or E4)");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Hecke vector-form construction and verification", "hvf-tool"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    bool verbose = false;
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "Write the report to this file");
        sub->add_flag("--verbose", verbose, "List passing checks too");
    };

    int w_max = 12;
    auto *formal = app.add_subcommand("verify-formal", "Exact verification of every identity over a grid");
    formal->add_option("--w-max", w_max, "Largest (even) weight in the grid");
    add_output(formal);

    bool use_builtin = false;
    std::string spec_path;
    std::size_t terms = 64;
    double tol = 1e-8;
    std::size_t n_points = 20;
    std::uint64_t seed = 1;
    std::vector<std::string> extra_points;
    auto *numeric = app.add_subcommand("verify-numeric", "Floating-point checks of the functional equations");
    numeric->add_flag("--builtin", use_builtin, "Use the builtin mu = 3 samples");
    numeric->add_option("--spec", spec_path, "JSON form-spec file");
    numeric->add_option("--terms", terms, "q-expansion truncation order");
    numeric->add_option("--tol", tol, "Residual tolerance");
    numeric->add_option("--points", n_points, "Number of seeded sample points");
    numeric->add_option("--seed", seed, "Seed for point sampling");
    numeric->add_option("--point", extra_points, "Extra point 're,im' (repeatable)");
    add_output(numeric);

    std::string kind;
    int show_r = 2;
    int show_w = -1;
    std::string present_text;
    bool at_zero = false;
    auto *show = app.add_subcommand("show", "Print a structured matrix (blank entries are zero)");
    show->add_option("kind", kind, "pascal | creation | exchange | dr | dry | transfer")
        ->required()
        ->check(CLI::IsMember({"pascal", "creation", "exchange", "dr", "dry", "transfer"}));
    show->add_option("--r", show_r, "Matrix order r (size r+1)");
    show->add_option("--w", show_w, "Weight, for transfer");
    show->add_option("--present", present_text, "Present coefficient indices, for transfer (e.g. 0,1)");
    show->add_flag("--at-zero", at_zero, "creation: show A_r = A_r(0)");

    std::string series_name;
    std::size_t qexp_terms = 10;
    auto *qexp = app.add_subcommand("qexp", "Print q-expansion coefficients");
    qexp->add_option("series", series_name, "E2 | E4 | E6 | DE2 | DE4 | DE6")->required();
    qexp->add_option("--terms", qexp_terms, "Truncation order");
    qexp->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    std::string builtin_name;
    std::string point_text;
    auto *eval = app.add_subcommand("eval", "Evaluate the Hecke vector-form at a point");
    eval->add_option("--builtin", builtin_name, "Builtin sample name");
    eval->add_option("--spec", spec_path, "JSON form-spec file");
    eval->add_option("--z", point_text, "Point 're,im'")->required();
    eval->add_option("--terms", terms, "q-expansion truncation order");
    eval->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*formal) {
            if (w_max < 2 || w_max % 2 != 0) {
                throw UsageError("--w-max must be an even integer >= 2");
            }
            Report rep = run_combinatorics_suite(10);
            rep.append(run_matrix_suite());
            rep.append(run_identity_suite(w_max));
            rep.suite = "formal (w <= " + std::to_string(w_max) + ")";
            emit_report(rep, format, out_path, verbose, out);
            return rep.all_passed() ? ok : check_failed;
        }

        if (*numeric) {
            if (terms < 8) {
                throw UsageError("--terms must be at least 8");
            }
            if (!(tol > 0.0)) {
                throw UsageError("--tol must be positive");
            }
            if (use_builtin == !spec_path.empty()) {
                throw UsageError("give exactly one of --builtin or --spec");
            }
            std::vector<NumericFormSpec> specs =
                use_builtin ? builtin_samples(terms) : std::vector<NumericFormSpec>{load_form_spec(spec_path, terms)};
            NumericSuiteOptions opt;
            opt.terms = terms;
            opt.points = n_points;
            opt.seed = seed;
            opt.tol = tol;
            for (const auto &p : extra_points) {
                opt.extra_points.push_back(parse_point(p));
            }
            const Report rep = run_numeric_suite(specs, opt);
            emit_report(rep, format, out_path, verbose, out);
            return rep.all_passed() ? ok : check_failed;
        }

        if (*show) {
            if (show_r < 0 || show_r > 12) {
                throw UsageError("--r must be between 0 and 12 for display");
            }
            const auto syms = SymbolSet::standard(show_r);
            std::optional<RingMatrix> m;
            if (kind == "pascal") {
                m = pascal(show_r, LaurentPoly::variable(syms, "z"));
            } else if (kind == "creation") {
                m = at_zero ? creation(syms, show_r) : creation(show_r, LaurentPoly::variable(syms, "lambda"));
            } else if (kind == "exchange") {
                m = exchange(syms, show_r);
            } else if (kind == "dr") {
                m = alternating_diagonal(syms, show_r);
            } else if (kind == "dry") {
                m = half_transpose(Side::right, alternating_diagonal(syms, show_r));
            } else {
                FormSpecSymbolic spec;
                spec.depth = show_r;
                spec.weight = show_w < 0 ? 2 * show_r + (show_r == 0 ? 2 : 0) : show_w;
                spec.present = present_text.empty() ? std::set<int>{} : parse_present(present_text);
                if (present_text.empty()) {
                    for (int k = 0; k <= show_r; ++k) {
                        spec.present.insert(k);
                    }
                }
                try {
                    m = SymbolicForm(spec).transfer_matrix().matrix;
                } catch (const std::invalid_argument &e) {
                    throw UsageError(e.what());
                }
            }
            out << format_grid(*m);
            return ok;
        }

        if (*qexp) {
            if (qexp_terms < 8) {
                throw UsageError("--terms must be at least 8");
            }
            const QSeries s = named_series(series_name, qexp_terms);
            if (format == "json") {
                nlohmann::json j{{"series", series_name}, {"weight", s.weight()}, {"period", s.period()}};
                for (const auto &c : s.coeffs()) {
                    j["coeffs"].push_back({c.real(), c.imag()});
                }
                out << j.dump(2) << '\n';
            } else {
                for (std::size_t n = 0; n <= s.order(); ++n) {
                    out << n << ' ' << std::setprecision(17) << s[n].real() << '\n';
                }
            }
            return ok;
        }

        if (*eval) {
            if (terms < 8) {
                throw UsageError("--terms must be at least 8");
            }
            if (builtin_name.empty() == spec_path.empty()) {
                throw UsageError("give exactly one of --builtin or --spec");
            }
            const NumericFormSpec spec =
                builtin_name.empty() ? load_form_spec(spec_path, terms) : find_builtin(builtin_name, terms);
            const cplx z = parse_point(point_text);
            if (!(z.imag() > 0.0)) {
                throw UsageError("z must lie in the upper half-plane");
            }
            const auto f = numeric_vector_form(spec, z);
            if (format == "json") {
                nlohmann::json j{{"name", spec.name}, {"point", {z.real(), z.imag()}}};
                for (const auto &v : f) {
                    j["F"].push_back({v.real(), v.imag()});
                }
                out << j.dump(2) << '\n';
            } else {
                out << std::setprecision(15);
                for (std::size_t n = 0; n < f.size(); ++n) {
                    out << "f_" << n << " = " << f[n].real() << (f[n].imag() < 0 ? " - " : " + ")
                        << std::abs(f[n].imag()) << "i\n";
                }
            }
            return ok;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const SpecError &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace hvf::cli
