#ifndef TRW_REALROOTS_HPP
#define TRW_REALROOTS_HPP

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "trw/intpoly.hpp"

namespace trw {

// Signed remainder sequence used for exact real-root counting.  The chain
// starts with the squarefree part of the input and its derivative; each later
// member is the negated remainder of the previous two, computed fraction-free
// (pseudo-remainder, content stripped) with the sign corrected so it matches
// the rational-arithmetic Sturm sequence up to a positive factor.
struct SturmChain {
    std::vector<IntPoly> chain;
};

// Floating-point root approximations of the squarefree part.  A numeric
// oracle for tests and diagnostics only; none of the exact predicates
// consult it.
struct ApproxRoots {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;  // |g(z)| for the monic-normalized squarefree part
    double bound = 0.0;             // largest residual bound the roots were refined to
};

SturmChain sturm_chain(const IntPoly& f);

// Exact sign of f at a rational point (denominators cleared, integer
// arithmetic only).
int sign_at(const IntPoly& f, const mpq_class& point);

// Number of DISTINCT real roots, over all of R or in the open interval
// (lo, hi).  Endpoints that are themselves roots raise EndpointIsRoot.
unsigned count_real_roots(const IntPoly& f);
unsigned count_real_roots(const IntPoly& f, const mpq_class& lo, const mpq_class& hi);

// True iff every root of f is real (multiplicity ignored).
bool is_totally_real(const IntPoly& f);

// True iff f is totally real and every root lies strictly inside (lo, hi).
bool all_roots_in(const IntPoly& f, const mpq_class& lo, const mpq_class& hi);

// The subsequence of polys whose roots all lie strictly inside (0, t),
// order preserved.
std::vector<IntPoly> filter_box(const std::vector<IntPoly>& polys, const mpq_class& t);

// Durand-Kerner simultaneous iteration on the squarefree part, refined until
// every residual |g(z)| drops below tol * (1 + sum_i |c_i| |z|^i).  Throws
// NonConvergence if the iteration budget runs out.
ApproxRoots approx_roots(const IntPoly& f, double tol);

}  // namespace trw

#endif
