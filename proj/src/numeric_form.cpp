#include <hvf/numeric_form.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include <hvf/combinatorics.hpp>
#include <hvf/ring_matrix.hpp>

namespace hvf
{

namespace
{

constexpr double min_imag = 0.5;

double relative_residual(cplx a, cplx b)
{
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double max_of(const std::vector<double> &v)
{
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

bool needs_e2(const NumericFormSpec &spec)
{
    return std::any_of(spec.coefficients.begin(), spec.coefficients.end(),
                       [](const auto &kv) { return kv.first >= 1; });
}

void require_interior(cplx z)
{
    if (z.imag() < min_imag || (-1.0 / z).imag() < min_imag) {
        std::ostringstream os;
        os << "point " << z << " violates Im z >= 0.5 and Im(-1/z) >= 0.5";
        throw std::domain_error(os.str());
    }
}

cplx ipow(cplx base, int e)
{
    cplx out{1.0, 0.0};
    for (int i = 0; i < std::abs(e); ++i) {
        out *= base;
    }
    return e < 0 ? 1.0 / out : out;
}

// Numeric matrix from an exact one whose entries only involve varpi.
std::vector<std::vector<cplx>> to_numeric(const RingMatrix &m, double omega)
{
    std::map<std::string, cplx> values{{"varpi", omega}};
    std::vector<std::vector<cplx>> out(m.rows(), std::vector<cplx>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i][j] = evaluate(m(i, j), values);
        }
    }
    return out;
}

std::vector<cplx> mat_vec(const std::vector<std::vector<cplx>> &m, const std::vector<cplx> &v)
{
    std::vector<cplx> out(m.size(), cplx{});
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

CheckRecord numeric_record(std::string name, std::string subject, cplx z, std::vector<double> residuals,
                           bool pass)
{
    CheckRecord c;
    c.name = std::move(name);
    c.subject = std::move(subject);
    c.point = z;
    c.residuals = std::move(residuals);
    c.pass = pass;
    return c;
}

} // namespace

void validate(const NumericFormSpec &spec)
{
    if (spec.group.mu < 3) {
        throw std::invalid_argument("mu must be at least 3");
    }
    if (spec.weight < 2 || spec.weight % 2 != 0) {
        throw std::invalid_argument("weight must be an even integer >= 2");
    }
    if (spec.depth < 0 || 2 * spec.depth > spec.weight) {
        throw std::invalid_argument("depth must satisfy 0 <= r <= w/2");
    }
    auto same_period = [&](const QSeries &s) {
        return std::abs(s.period() - spec.group.omega) <= 1e-12 * spec.group.omega;
    };
    for (const auto &[k, series] : spec.coefficients) {
        if (k < 0 || k > spec.depth) {
            throw std::invalid_argument("coefficient index " + std::to_string(k) + " outside 0..r");
        }
        if (series.weight() != spec.weight - 2 * k) {
            throw std::invalid_argument("coefficient B_" + std::to_string(k) + " has weight " +
                                        std::to_string(series.weight()) + ", expected " +
                                        std::to_string(spec.weight - 2 * k));
        }
        if (!same_period(series)) {
            throw std::invalid_argument("coefficient B_" + std::to_string(k) + " period differs from the group width");
        }
    }
    if (needs_e2(spec)) {
        if (!spec.e2) {
            throw std::invalid_argument("an E2 series is required when some B_k with k >= 1 is present");
        }
        if (spec.e2->weight() != 2 || !same_period(*spec.e2)) {
            throw std::invalid_argument("E2 series must have weight 2 and the group period");
        }
    }
}

FormSpecSymbolic symbolic_shape(const NumericFormSpec &spec)
{
    FormSpecSymbolic out;
    out.mu = spec.group.mu;
    out.weight = spec.weight;
    out.depth = spec.depth;
    for (const auto &[k, s] : spec.coefficients) {
        out.present.insert(k);
    }
    out.unit_constant_slot = false;
    return out;
}

std::vector<cplx> numeric_vector_form(const NumericFormSpec &spec, cplx z)
{
    validate(spec);
    const int r = spec.depth;
    std::vector<cplx> b(static_cast<std::size_t>(r) + 1, cplx{});
    for (const auto &[k, series] : spec.coefficients) {
        b[static_cast<std::size_t>(k)] = eval_qseries(series, z).value;
    }
    const cplx e2 = spec.e2 ? eval_qseries(*spec.e2, z).value : cplx{};
    const cplx C = spec.group.C;

    std::vector<cplx> g(b.size(), cplx{});
    for (int l = 0; l <= r; ++l) {
        cplx sum{};
        for (int m = 0; m <= r - l; ++m) {
            sum += bracket(r, l, m).to_double() * b[static_cast<std::size_t>(l + m)] * ipow(e2, m);
        }
        g[static_cast<std::size_t>(l)] = ipow(C, l) * sum;
    }
    std::vector<cplx> f(b.size(), cplx{});
    for (int n = 0; n <= r; ++n) {
        for (int k = 0; k <= n; ++k) {
            f[static_cast<std::size_t>(n)] += binomial(n, k).to_double() * g[static_cast<std::size_t>(k)] * ipow(z, n - k);
        }
    }
    return f;
}

CheckRecord check_E2_anomaly(const HeckeGroup &group, const QSeries &e2, cplx z, double tol)
{
    require_interior(z);
    const cplx lhs = eval_qseries(e2, group.S(z)).value;
    const cplx rhs = z * z * eval_qseries(e2, z).value + group.C * z;
    const double res = std::abs(lhs - rhs);
    return numeric_record("E2_anomaly", "mu=" + std::to_string(group.mu), z, {res}, res < tol);
}

LawResiduals functional_equation_residuals(const NumericFormSpec &spec, cplx z, SLawMatrix s_matrix)
{
    const int r = spec.depth;
    const auto syms = SymbolSet::standard(0);
    const auto f_z = numeric_vector_form(spec, z);
    const auto f_tz = numeric_vector_form(spec, spec.group.T(z));
    const auto f_sz = numeric_vector_form(spec, spec.group.S(z));

    LawResiduals out;
    const RingMatrix exp_wa =
        nilpotent_exp(LaurentPoly::variable(syms, "varpi") * creation(syms, r), static_cast<unsigned>(r) + 1);
    const auto t_rhs = mat_vec(to_numeric(exp_wa, spec.group.omega), f_z);
    for (std::size_t i = 0; i < f_z.size(); ++i) {
        out.t_law.push_back(relative_residual(f_tz[i], t_rhs[i]));
    }

    const RingMatrix d = alternating_diagonal(syms, r);
    const RingMatrix dm = s_matrix == SLawMatrix::half_transpose ? half_transpose(Side::right, d) : d;
    const auto s_rhs = mat_vec(to_numeric(dm, spec.group.omega), f_z);
    const cplx scale = ipow(z, spec.weight - r);
    for (std::size_t i = 0; i < f_z.size(); ++i) {
        out.s_law.push_back(relative_residual(f_sz[i] / scale, s_rhs[i]));
    }
    return out;
}

std::vector<CheckRecord> check_functional_equations(const NumericFormSpec &spec, cplx z, double tol)
{
    require_interior(z);
    auto res = functional_equation_residuals(spec, z);
    const bool t_ok = max_of(res.t_law) < tol;
    const bool s_ok = max_of(res.s_law) < tol;
    return {numeric_record("F_under_T", spec.name, z, std::move(res.t_law), t_ok),
            numeric_record("F_under_S", spec.name, z, std::move(res.s_law), s_ok)};
}

std::vector<double> cross_engine_residuals(const NumericFormSpec &spec, cplx z)
{
    const SymbolicForm form(symbolic_shape(spec));
    std::map<std::string, cplx> values{
        {"z", z}, {"C", spec.group.C}, {"varpi", spec.group.omega}, {"E", cplx{}}};
    if (spec.e2) {
        values["E"] = eval_qseries(*spec.e2, z).value;
    }
    for (const auto &[k, series] : spec.coefficients) {
        values["B" + std::to_string(k)] = eval_qseries(series, z).value;
    }
    const auto numeric = numeric_vector_form(spec, z);
    std::vector<double> out;
    for (int n = 0; n <= spec.depth; ++n) {
        out.push_back(relative_residual(evaluate(form.build_f(n), values), numeric[static_cast<std::size_t>(n)]));
    }
    return out;
}

std::vector<NumericFormSpec> builtin_samples(std::size_t terms)
{
    const HeckeGroup g = modular_group();
    const QSeries e2 = eisenstein_mu3(2, terms);
    const QSeries e4 = eisenstein_mu3(4, terms);
    const QSeries e6 = eisenstein_mu3(6, terms);
    const QSeries one = QSeries::constant(1.0, 1.0, terms);

    std::vector<NumericFormSpec> out;
    auto add = [&](std::string name, int w, int r, std::map<int, QSeries> b) {
        NumericFormSpec s{std::move(name), g, w, r, std::move(b), e2};
        validate(s);
        out.push_back(std::move(s));
    };
    add("E2", 2, 1, {{1, one}});
    add("E2^2", 4, 2, {{2, one}});
    // D E4 = (E2 E4 - E6) / 3
    add("DE4", 6, 1, {{0, e6.scaled(-1.0 / 3.0)}, {1, e4.scaled(1.0 / 3.0)}});
    // D E6 = (E2 E6 - E4^2) / 2
    add("DE6", 8, 1, {{0, (e4 * e4).scaled(-0.5)}, {1, e6.scaled(0.5)}});
    add("E4", 4, 0, {{0, e4}});
    return out;
}

std::vector<double> ramanujan_residuals(std::size_t terms)
{
    const QSeries e2 = eisenstein_mu3(2, terms);
    const QSeries e4 = eisenstein_mu3(4, terms);
    const QSeries e6 = eisenstein_mu3(6, terms);

    auto residual = [](const QSeries &lhs, const QSeries &a, const QSeries &b) {
        // lhs - (a - b), relative to the size of the participating coefficients
        double worst = 0.0;
        for (std::size_t n = 0; n <= lhs.order(); ++n) {
            const double scale = std::max({std::abs(lhs[n]), std::abs(a[n]), std::abs(b[n]), 1.0});
            worst = std::max(worst, std::abs(lhs[n] - (a[n] - b[n])) / scale);
        }
        return worst;
    };
    return {residual(e2.derive().scaled(12.0), e2 * e2, e4), residual(e4.derive().scaled(3.0), e2 * e4, e6),
            residual(e6.derive().scaled(2.0), e2 * e6, e4 * e4)};
}

std::vector<cplx> sample_points(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-0.5, 0.5);
    std::uniform_real_distribution<double> im(0.7, 1.5);
    std::vector<cplx> out;
    while (out.size() < count) {
        const cplx z{re(rng), im(rng)};
        if ((-1.0 / z).imag() >= min_imag) {
            out.push_back(z);
        }
    }
    return out;
}

namespace
{

QSeries parse_series(const nlohmann::json &j, const HeckeGroup &group, int weight, std::size_t terms,
                     const std::string &where)
{
    if (!j.is_object()) {
        throw SpecError(where + ": series must be an object");
    }
    if (j.contains("builtin")) {
        if (group.mu != 3) {
            throw SpecError(where + ": builtin series are only available for mu = 3");
        }
        const auto name = j.at("builtin").get<std::string>();
        int bw = 0;
        if (name == "E2") {
            bw = 2;
        } else if (name == "E4") {
            bw = 4;
        } else if (name == "E6") {
            bw = 6;
        } else {
            throw SpecError(where + ": unknown builtin '" + name + "' (expected E2, E4 or E6)");
        }
        if (bw != weight) {
            throw SpecError(where + ": builtin " + name + " has weight " + std::to_string(bw) + ", slot needs " +
                            std::to_string(weight));
        }
        return eisenstein_mu3(bw, terms);
    }
    if (j.contains("coeffs")) {
        const auto &arr = j.at("coeffs");
        if (!arr.is_array() || arr.empty()) {
            throw SpecError(where + ": coeffs must be a non-empty array of [re, im]");
        }
        std::vector<cplx> c(std::max(terms, arr.size() - 1) + 1, cplx{});
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const auto &v = arr[i];
            if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
                throw SpecError(where + ": coeffs[" + std::to_string(i) + "] must be [re, im]");
            }
            c[i] = cplx{v[0].get<double>(), v[1].get<double>()};
        }
        c.resize(terms + 1);
        return QSeries(group.omega, std::move(c), weight);
    }
    throw SpecError(where + ": series needs 'builtin' or 'coeffs'");
}

cplx parse_scale(const nlohmann::json &j, const std::string &where)
{
    if (!j.is_array() || j.size() != 2) {
        throw SpecError(where + ": scale must be [[num],[den]] or [re, im]");
    }
    if (j[0].is_array()) {
        if (!j[1].is_array() || j[0].size() != 1 || j[1].size() != 1 || !j[0][0].is_number_integer() ||
            !j[1][0].is_number_integer()) {
            throw SpecError(where + ": rational scale must be [[num],[den]] with integers");
        }
        const auto den = j[1][0].get<long>();
        if (den == 0) {
            throw SpecError(where + ": rational scale has zero denominator");
        }
        return cplx{static_cast<double>(j[0][0].get<long>()) / static_cast<double>(den), 0.0};
    }
    if (!j[0].is_number() || !j[1].is_number()) {
        throw SpecError(where + ": complex scale must be [re, im]");
    }
    return cplx{j[0].get<double>(), j[1].get<double>()};
}

} // namespace

NumericFormSpec parse_form_spec(const nlohmann::json &j, std::size_t terms)
{
    try {
        if (!j.is_object()) {
            throw SpecError("form spec must be a JSON object");
        }
        for (const char *key : {"mu", "weight", "depth", "coefficients"}) {
            if (!j.contains(key)) {
                throw SpecError(std::string("missing required field '") + key + "'");
            }
        }
        if (!j.at("mu").is_number_integer() || !j.at("weight").is_number_integer() ||
            !j.at("depth").is_number_integer()) {
            throw SpecError("'mu', 'weight' and 'depth' must be integers");
        }
        const int mu = j.at("mu").get<int>();
        if (mu < 3) {
            throw SpecError("'mu' must be at least 3");
        }
        HeckeGroup group = modular_group();
        if (j.contains("C")) {
            const auto &c = j.at("C");
            if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number()) {
                throw SpecError("'C' must be [re, im]");
            }
            group = hecke_group(mu, cplx{c[0].get<double>(), c[1].get<double>()});
        } else if (mu != 3) {
            throw SpecError("'C' is required when mu != 3");
        }

        NumericFormSpec spec;
        spec.group = group;
        spec.weight = j.at("weight").get<int>();
        spec.depth = j.at("depth").get<int>();
        spec.name = j.value("name", std::string("spec"));
        if (spec.weight < 2 || spec.weight % 2 != 0) {
            throw SpecError("'weight' must be an even integer >= 2");
        }
        if (spec.depth < 0 || 2 * spec.depth > spec.weight) {
            throw SpecError("'depth' must satisfy 0 <= depth <= weight/2");
        }

        const auto &coeffs = j.at("coefficients");
        if (!coeffs.is_array()) {
            throw SpecError("'coefficients' must be an array");
        }
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            const std::string where = "coefficients[" + std::to_string(i) + "]";
            const auto &entry = coeffs[i];
            if (!entry.is_object() || !entry.contains("k") || !entry.at("k").is_number_integer() ||
                !entry.contains("series")) {
                throw SpecError(where + ": needs integer 'k' and 'series'");
            }
            const int k = entry.at("k").get<int>();
            if (k < 0 || k > spec.depth) {
                throw SpecError(where + ": k = " + std::to_string(k) + " outside 0..depth");
            }
            if (spec.coefficients.count(k)) {
                throw SpecError(where + ": duplicate k = " + std::to_string(k));
            }
            QSeries series = parse_series(entry.at("series"), group, spec.weight - 2 * k, terms, where);
            if (entry.contains("scale")) {
                series = series.scaled(parse_scale(entry.at("scale"), where));
            }
            spec.coefficients.emplace(k, std::move(series));
        }

        if (j.contains("E2")) {
            spec.e2 = parse_series(j.at("E2"), group, 2, terms, "E2");
        } else if (mu == 3) {
            spec.e2 = eisenstein_mu3(2, terms);
        }
        try {
            validate(spec);
        } catch (const std::invalid_argument &e) {
            throw SpecError(e.what());
        }
        return spec;
    } catch (const nlohmann::json::exception &e) {
        throw SpecError(std::string("malformed form spec: ") + e.what());
    }
}

NumericFormSpec load_form_spec(const std::string &path, std::size_t terms)
{
    std::ifstream in(path);
    if (!in) {
        throw SpecError("cannot open form spec '" + path + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw SpecError("'" + path + "' is not valid JSON: " + e.what());
    }
    return parse_form_spec(j, terms);
}

Report run_numeric_suite(const std::vector<NumericFormSpec> &specs, const NumericSuiteOptions &opt)
{
    for (const auto &z : opt.extra_points) {
        require_interior(z);
    }
    auto points = sample_points(opt.seed, opt.points);
    points.insert(points.end(), opt.extra_points.begin(), opt.extra_points.end());

    Report rep;
    rep.suite = "numeric";

    std::set<int> anomaly_done;
    bool modular = false;
    for (const auto &spec : specs) {
        validate(spec);
        modular = modular || spec.group.mu == 3;
        if (spec.e2 && anomaly_done.insert(spec.group.mu).second) {
            HeckeGroup wrong = spec.group;
            wrong.C *= 1.01;
            for (const auto &z : points) {
                rep.checks.push_back(check_E2_anomaly(spec.group, *spec.e2, z, opt.tol));
                auto control = check_E2_anomaly(wrong, *spec.e2, z, opt.tol);
                control.name = "control_E2_perturbed_C";
                control.pass = control.residuals.front() > opt.control_threshold;
                rep.checks.push_back(std::move(control));
            }
        }
    }

    for (const auto &spec : specs) {
        NumericFormSpec perturbed = spec;
        perturbed.group.C *= 1.01;
        for (const auto &z : points) {
            rep.append(check_functional_equations(spec, z, opt.tol));

            auto cross = cross_engine_residuals(spec, z);
            const bool cross_ok = max_of(cross) < opt.cross_tol;
            rep.checks.push_back(numeric_record("cross_engine", spec.name, z, std::move(cross), cross_ok));

            if (spec.depth >= 1) {
                auto pc = functional_equation_residuals(perturbed, z).s_law;
                const bool pc_ok = max_of(pc) > opt.control_threshold;
                rep.checks.push_back(numeric_record("control_perturbed_C", spec.name, z, std::move(pc), pc_ok));

                auto dc = functional_equation_residuals(spec, z, SLawMatrix::plain_diagonal).s_law;
                const bool dc_ok = max_of(dc) > opt.control_threshold;
                rep.checks.push_back(numeric_record("control_plain_diagonal", spec.name, z, std::move(dc), dc_ok));
            }
        }
    }

    if (modular) {
        static const char *labels[] = {"12 DE2 = E2^2 - E4", "3 DE4 = E2 E4 - E6", "2 DE6 = E2 E6 - E4^2"};
        const auto res = ramanujan_residuals(opt.terms);
        for (std::size_t i = 0; i < res.size(); ++i) {
            CheckRecord c;
            c.name = "ramanujan";
            c.subject = labels[i];
            c.residuals = {res[i]};
            c.pass = res[i] < opt.ramanujan_tol;
            rep.checks.push_back(std::move(c));
        }
    }
    std::ostringstream note;
    note << "control_* checks pass when the deliberately wrong variant misses by more than "
         << opt.control_threshold;
    rep.notes.push_back(note.str());
    return rep;
}

} // namespace hvf
