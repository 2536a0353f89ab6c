#ifndef TRW_FAMILIES_HPP
#define TRW_FAMILIES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trw/intpoly.hpp"
#include "trw/multiparam.hpp"

namespace trw {

// Inclusive integer interval for one parameter.
struct ParamRange {
    mpz_class lo;
    mpz_class hi;
};

// A parametrized family f_t(x): monic in x, integer-polynomial coefficients
// in the parameters, constant term +1 or -1, and at least one nonconstant
// middle coefficient.  These are exactly the hypotheses the verifier and the
// witness construction rely on, so the factory enforces them.
struct ParamFamily {
    std::string name;
    std::vector<std::string> params;
    unsigned degree = 0;
    ParamXPoly poly;
    std::vector<ParamRange> default_ranges;  // aligned with params
    std::string provenance;
};

// Validating constructor; throws HypothesisViolation naming the broken
// hypothesis (non-monic, degree < 2, constant term not ±1 constant, no
// nonconstant middle coefficient), WrongDegree if the declared degree does
// not match the polynomial.
ParamFamily make_family(std::string name, std::vector<std::string> params, unsigned degree,
                        ParamXPoly poly, std::vector<ParamRange> default_ranges,
                        std::string provenance);

// The built-in families, fixed coefficients and default parameter ranges.
const std::vector<ParamFamily>& registry();

// Per-instance hypothesis check results.
struct InstanceResult {
    std::map<std::string, mpz_class> assignment;
    bool totally_real = false;
    bool unit_constant = false;
    bool degree_ok = false;
    bool ok() const { return totally_real && unit_constant && degree_ok; }
};

// Aggregate over an integer box of parameter values.
struct FamilyReport {
    std::string family;
    std::vector<ParamRange> ranges;  // the ranges actually scanned
    std::uint64_t instances = 0;
    std::vector<InstanceResult> failures;  // only failing instances, in range order
    double elapsed_ms = 0.0;
    std::string tool_version;
};

// The nonconstant power-sum witness for a family at torsion half-order N.
struct WitnessReport {
    std::string family;
    unsigned N = 0;
    unsigned k = 0;
    unsigned exponent = 0;        // 2*N*k
    MultiParamPoly witness;       // Q_{2Nk} as a polynomial in the family parameter
    bool nonconstant = false;
};

InstanceResult verify_instance(const ParamFamily& fam,
                               const std::map<std::string, mpz_class>& assignment);

// Runs verify_instance over every integer point of the box; `ranges` must be
// aligned with fam.params (empty means the family defaults).  Instances are
// independent, so `jobs` worker threads may split them; the report is
// deterministic regardless.
FamilyReport verify_range(const ParamFamily& fam, const std::vector<ParamRange>& ranges,
                          unsigned jobs = 1);

// Smallest k in 1..degree with the kN-th power sum nonconstant in the
// parameter.  The search is capped at the degree on purpose: a miss there
// means a hypothesis does not hold (or a bug), reported as NoWitnessInRange.
unsigned find_witness_k(const ParamFamily& fam, unsigned N);

// Witness polynomial Q_{2Nk} with k minimal; self-checks the result against
// the companion-matrix trace at three sampled parameter values.
WitnessReport build_witness(const ParamFamily& fam, unsigned N);

// Exact expansion of (x^2-2θx-1)(x^2-2θ'x-1) for θ,θ' = a ± b√d:
// x^4 - 4a·x^3 + (4(a^2-b^2·d)-2)·x^2 + 4a·x + 1.  d must be a positive
// squarefree integer (trial division check).
IntPoly gen_quartic_2param(const mpz_class& a, const mpz_class& b, const mpz_class& d);

// Family Π_i (x^2 - 2h(a,α_i)x - 1) over the roots α_i of alpha_minpoly,
// computed as Res_y(alpha_minpoly(y), x^2 - 2h(a,y)x - 1).  h must be a
// two-parameter polynomial (first parameter becomes the family parameter,
// the second stands for α) with deg > 0 in the first and deg equal to
// deg(alpha_minpoly) - 1 in the second; alpha_minpoly must be monic and
// totally real.
ParamFamily gen_unit_family(const MultiParamPoly& h, const IntPoly& alpha_minpoly);

// True iff the discriminant of the monic cubic is a positive perfect square
// (the Galois group is then cyclic of order 3 when f is irreducible).
bool cyclic_cubic_check(const IntPoly& f);

}  // namespace trw

#endif
