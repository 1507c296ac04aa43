#ifndef HVF_NUMERIC_FORM_HPP
#define HVF_NUMERIC_FORM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <hvf/qseries.hpp>
#include <hvf/report.hpp>
#include <hvf/vector_form.hpp>

namespace hvf
{

/// Numeric counterpart of FormSpecSymbolic: each present B_k is a q-series
/// of nominal weight w - 2k. `e2` is the weight-2 Eisenstein series of the
/// group; it is needed whenever some B_k with k >= 1 is present.
struct NumericFormSpec {
    std::string name;
    HeckeGroup group;
    int weight = 2;
    int depth = 0;
    std::map<int, QSeries> coefficients;
    std::optional<QSeries> e2;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const NumericFormSpec &spec);

// Shape of the symbolic form with the same present coefficients; every
// present slot stays a symbol.
FormSpecSymbolic symbolic_shape(const NumericFormSpec &spec);

// F_U(z) from the hauptbuch values g_l(z) by binomial convolution.
std::vector<cplx> numeric_vector_form(const NumericFormSpec &spec, cplx z);

// E_2(-1/z) - z^2 E_2(z) - C z, absolute. Needs Im z, Im(-1/z) >= 0.5.
CheckRecord check_E2_anomaly(const HeckeGroup &group, const QSeries &e2, cplx z, double tol);

enum class SLawMatrix { half_transpose, plain_diagonal };

struct LawResiduals {
    std::vector<double> t_law;
    std::vector<double> s_law;
};

// Componentwise relative residuals of F(Tz) = e^{omega A_r} F(z) and
// F(Sz) / z^(w-r) = D F(z), D = d_r^y (or d_r for the negative control).
LawResiduals functional_equation_residuals(const NumericFormSpec &spec, cplx z,
                                           SLawMatrix s_matrix = SLawMatrix::half_transpose);

// Both laws at z; throws std::domain_error unless Im z, Im(-1/z) >= 0.5.
std::vector<CheckRecord> check_functional_equations(const NumericFormSpec &spec, cplx z, double tol);

// Relative differences between numeric_vector_form and the symbolic F_U with
// numeric values substituted for z, C, E, B_k and varpi.
std::vector<double> cross_engine_residuals(const NumericFormSpec &spec, cplx z);

// E2 (w=2,r=1), E2^2 (w=4,r=2), DE4 (w=6,r=1), DE6 (w=8,r=1), E4 (w=4,r=0).
std::vector<NumericFormSpec> builtin_samples(std::size_t terms = 64);

// Max relative coefficient residual of
// 12 DE2 - (E2^2 - E4), 3 DE4 - (E2 E4 - E6), 2 DE6 - (E2 E6 - E4^2).
std::vector<double> ramanujan_residuals(std::size_t terms = 64);

// count points with Re z in [-0.5, 0.5], Im z in [0.7, 1.5], Im(-1/z) >= 0.5.
std::vector<cplx> sample_points(std::uint64_t seed, std::size_t count);

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON form-spec file contents; throws SpecError naming the schema violation.
NumericFormSpec parse_form_spec(const nlohmann::json &j, std::size_t terms);
NumericFormSpec load_form_spec(const std::string &path, std::size_t terms);

struct NumericSuiteOptions {
    std::size_t terms = 64;
    std::size_t points = 20;
    std::uint64_t seed = 1;
    double tol = 1e-8;
    double cross_tol = 1e-10;
    double control_threshold = 1e-3;
    double ramanujan_tol = 1e-6;
    std::vector<cplx> extra_points;
};

// Anomaly, both laws, negative controls and the cross-engine check for
// every spec at every sampled point, plus the Ramanujan sanity check for
// mu = 3.
Report run_numeric_suite(const std::vector<NumericFormSpec> &specs, const NumericSuiteOptions &opt);

} // namespace hvf

#endif
