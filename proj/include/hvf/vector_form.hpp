#ifndef HVF_VECTOR_FORM_HPP
#define HVF_VECTOR_FORM_HPP

#include <set>
#include <string>
#include <vector>

#include <hvf/laurent_poly.hpp>
#include <hvf/report.hpp>
#include <hvf/ring_matrix.hpp>

namespace hvf
{

/// Shape of a quasiautomorphic form U = sum_k B_k E^k of weight w and depth r.
///
/// `present` lists the indices k whose coefficient B_k is a non-zero symbol;
/// the others are zero. A present slot of weight zero (k = w/2) holds a
/// constant, which is normalized to 1 when `unit_constant_slot` is set and
/// kept as the symbol B_k otherwise.
struct FormSpecSymbolic {
    int mu = 3;
    int weight = 2;
    int depth = 0;
    std::set<int> present;
    bool unit_constant_slot = true;

    std::string label() const;
};

// Throws std::invalid_argument naming the violated constraint.
void validate(const FormSpecSymbolic &spec);

struct Hauptbuch {
    std::vector<LaurentPoly> entries;
};

struct VectorForm {
    std::vector<LaurentPoly> entries;
};

struct TransferMatrix {
    RingMatrix matrix;
};

// A validated spec bound to its symbol set (z, varpi, C, E, B0..Br, ...).
class SymbolicForm
{
public:
    explicit SymbolicForm(FormSpecSymbolic spec);

    const FormSpecSymbolic &spec() const { return m_spec; }
    const SymbolSetPtr &symbols() const { return m_syms; }
    int weight() const { return m_spec.weight; }
    int depth() const { return m_spec.depth; }

    LaurentPoly var(std::string_view name, int exponent = 1) const;
    LaurentPoly constant(const Rational &c) const;

    // Value standing in for B_k: zero, 1, or the symbol B_k.
    LaurentPoly coefficient(int k) const;

    // g_l = C^l sum_{m=0}^{r-l} {r,l}_m B_{l+m} E^m
    LaurentPoly build_g(int l) const;
    // f_n = sum_k C(n,k) g_k z^(n-k)
    LaurentPoly build_f(int n) const;

    Hauptbuch hauptbuch() const;
    VectorForm vector_form() const;
    TransferMatrix transfer_matrix() const;
    // Column (1, z, ..., z^r).
    RingMatrix monomial_vector() const;

    // z -> -1/z, E -> z^2 E + C z, B_k -> z^(w-2k) B_k.
    RingHom sigma_S() const;
    // z -> z + varpi.
    RingHom sigma_T() const;

private:
    FormSpecSymbolic m_spec;
    SymbolSetPtr m_syms;
    std::vector<LaurentPoly> m_g;
};

RingMatrix monomial_vector(const SymbolSetPtr &syms, int r);

// The three alternative constructions of F_U.
VectorForm vector_form_by_exponential(const SymbolicForm &form); // e^{zA_r} G_U
VectorForm vector_form_by_transfer(const SymbolicForm &form);    // P(G_U) nu_r
VectorForm vector_form_by_pascal(const SymbolicForm &form);      // P_r(z) G_U

// Exact identity checks; one record per index (or one for a vector law).
std::vector<CheckRecord> verify_prop_gS(const SymbolicForm &form);
std::vector<CheckRecord> verify_cor_fS(const SymbolicForm &form);
std::vector<CheckRecord> verify_thm_T(const SymbolicForm &form);
std::vector<CheckRecord> verify_thm_S(const SymbolicForm &form);
std::vector<CheckRecord> verify_orthogonality(const SymbolicForm &form);
// sigma_T fixes each g_l and P(G_U).
std::vector<CheckRecord> verify_periodicity(const SymbolicForm &form);
// Convolution, exponential, transfer-matrix and Pascal routes agree.
std::vector<CheckRecord> verify_routes(const SymbolicForm &form);
// sigma_S applied twice to f_n against (-1)^(w-r) (-1)^r f_n.
std::vector<CheckRecord> verify_double_S(const SymbolicForm &form);

// Everything above for one spec.
std::vector<CheckRecord> verify_all(const SymbolicForm &form);

} // namespace hvf

#endif
