#ifndef HVF_COMBINATORICS_HPP
#define HVF_COMBINATORICS_HPP

#include <hvf/rational.hpp>

namespace hvf
{

// C(n, k); zero when k < 0 or k > n. Throws std::domain_error for n < 0.
Rational binomial(long n, long k);

// {r, l}_m = (m + l)! (r - l)! / (m! r!), defined for r >= l >= 0 and
// 0 <= m <= r - l. Anything else throws std::domain_error("bracket domain").
Rational bracket(long r, long l, long m);

// C(m + p, p) {r, l}_{m+p} == C(r - l, m) {r, m + l}_p, exactly.
// Requires l + m + p <= r (and all arguments non-negative).
bool check_coeff_equiv(long r, long l, long m, long p);

struct SumPair {
    Rational lhs;
    Rational rhs;
};

// lhs = sum_{l=0}^{n} (-1)^l C(n, l) C(r - l, r - m), rhs = C(r - n, m).
// Requires 0 <= n <= r and 0 <= m <= r.
SumPair vandermonde_collapse(long n, long r, long m);

} // namespace hvf

#endif
