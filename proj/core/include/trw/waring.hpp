#ifndef TRW_WARING_HPP
#define TRW_WARING_HPP

#include <gmpxx.h>

#include <array>
#include <optional>
#include <vector>

#include "trw/intpoly.hpp"

namespace trw {

// m = parts[0]^2 + parts[1]^2 + parts[2]^2 + parts[3]^2, parts descending.
struct FourSquares {
    std::array<mpz_class, 4> parts;
};

// Deterministic decomposition: depth-first over descending first parts, so
// the result is the lexicographically largest solution.  Always exists
// (Lagrange).
FourSquares four_squares(const mpz_class& m);

// g(x) = ±f(x+k): sign flipped when the leading coefficient is negative,
// k >= N0 minimal such that g(n) >= 0 for every integer n >= 0.
struct NormalizedPoly {
    IntPoly poly;
    mpz_class shift;
    bool negated = false;
};

NormalizedPoly normalize_poly(const IntPoly& f, const mpz_class& N0);

// m = f(terms[0]) + ... + f(terms[s1-1]) + s2 with s1 + s2 <= r.
struct KamkeRepresentation {
    std::vector<mpz_class> terms;  // descending arguments, all >= 1
    mpz_class s2;
};

// Depth-first search, descending arguments tried before falling back to the
// unit remainder s2; the first representation found is returned.  A miss
// within the budget is a normal value (empty optional), not an error.
// Requires f nonconstant with f(n) >= 0 on the probed arguments.
std::optional<KamkeRepresentation> kamke_represent(const IntPoly& f, const mpz_class& m,
                                                   unsigned r);

// Minimal budgets over a whole range of m.
struct KamkeScan {
    unsigned m_max = 0;
    unsigned r_max = 0;
    std::vector<unsigned> min_r;  // index m-1; 0 marks a gap (no r <= r_max works)
    std::vector<unsigned> gaps;   // the m values with no representation
    unsigned overall_max = 0;     // largest minimal r over the representable m
    unsigned attained_at = 0;     // smallest m attaining overall_max (0 when none)
};

// Per-m searches are independent; `jobs` threads may split them and the
// table is identical regardless.
KamkeScan kamke_scan(const IntPoly& f, unsigned m_max, unsigned r_max, unsigned jobs = 1);

// The set defined by "ax != 0, ax != b, ax and b-ax are sums of four squares
// of nonnegative integers", evaluated over x in [-x_max, x_max] with W = N.
// Over the rational integers this coincides with {x : 0 < ax < b}; the
// report records whether the containment chain collapsed to that equality.
struct PhiWReport {
    mpz_class a;
    mpz_class b;
    unsigned x_max = 0;
    std::vector<mpz_class> members;  // ascending
    bool chain_equal = false;
};

PhiWReport phi_w_set(const mpz_class& a, const mpz_class& b, unsigned x_max);

}  // namespace trw

#endif
