#ifndef TRW_SYMFUN_HPP
#define TRW_SYMFUN_HPP

#include <gmpxx.h>

#include <vector>

#include "trw/intpoly.hpp"
#include "trw/multiparam.hpp"

namespace trw {

// Power sums q_m = sum of alpha_i^m over the roots of a monic polynomial,
// computed exactly from its coefficients (no root finding involved).
struct PowerSums {
    unsigned n = 0;                  // degree of the source polynomial
    std::vector<mpz_class> values;   // q_1, q_2, ..., q_M
};

// Elementary symmetric functions e_1..e_n of the same root multiset.
struct ElemSym {
    std::vector<mpz_class> values;
};

// q_1..q_M for a monic integer polynomial of degree >= 1, via the
// Newton-Girard recurrence.  Throws NotMonic / DegreeTooSmall.
PowerSums power_sums_from_coeffs(const IntPoly& f, unsigned M);

// Invert the recurrence: recover e_1..e_n from q_1..q_n (at least n values
// required).  Each step divides by k; when the q's are not actually the
// power sums of an integer polynomial that division can fail, which is
// reported as NonIntegralDivision.
ElemSym elem_from_power_sums(const PowerSums& q, unsigned n);

// The m-th power sum of a parametrized family, as a polynomial in the
// family's parameters.  Instantiating the result at a parameter value equals
// computing power_sums_from_coeffs on the instantiated polynomial.
MultiParamPoly q_m_param(const ParamXPoly& f, unsigned m);

// The monic integer polynomial whose roots are the N-th powers of the roots
// of f (with multiplicity).  Degree is preserved.
IntPoly root_power_transform(const IntPoly& f, unsigned N);

}  // namespace trw

#endif
