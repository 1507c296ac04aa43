#ifndef HVF_FORMAL_SUITE_HPP
#define HVF_FORMAL_SUITE_HPP

#include <vector>

#include <hvf/report.hpp>
#include <hvf/vector_form.hpp>

namespace hvf
{

// Every (w, r, present) with even 2 <= w <= w_max, 0 <= r <= w/2 and
// present ranging over all subsets of {0..r}.
std::vector<FormSpecSymbolic> spec_grid(int w_max);

// Bracket identity over l + m + p <= r <= r_max and the Vandermonde
// collapse over n <= r <= r_max, m <= r.
Report run_combinatorics_suite(int r_max = 10);

struct MatrixSuiteBounds {
    int pascal_max = 8;
    int nilpotent_max = 10;
    int exp_max = 8;
    int exchange_max = 10;
    int char_poly_max = 6;
};

// Pascal addition law, nilpotency index, exponential = Pascal, exchange
// involution, characteristic polynomial of A_r(lambda).
Report run_matrix_suite(const MatrixSuiteBounds &bounds = {});

// verify_all over spec_grid(w_max).
Report run_identity_suite(int w_max = 12);

} // namespace hvf

#endif
