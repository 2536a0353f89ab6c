#ifndef TRW_INTPOLY_HPP
#define TRW_INTPOLY_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trw/errors.hpp"

namespace trw {

// Dense univariate polynomial over the integers. coeff(i) holds the
// coefficient of x^i. Normal form: the highest-index entry is nonzero; the
// zero polynomial is the empty sequence and reports degree() == -1.
//
// Values are immutable after construction; every operation returns a fresh
// polynomial, so instances can be shared freely across threads.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);
    IntPoly(std::initializer_list<long> ascending_coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(mpz_class c);
    static IntPoly x();
    static IntPoly monomial(mpz_class c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading() const;
    bool is_monic() const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend bool operator==(const IntPoly& f, const IntPoly& g) { return f.c_ == g.c_; }

private:
    std::vector<mpz_class> c_;
    void normalize();
};

IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly mul_scalar(const IntPoly& f, const mpz_class& c);
IntPoly pow(const IntPoly& f, unsigned long e);

// Exact Horner evaluation.
mpz_class eval(const IntPoly& f, const mpz_class& x0);

IntPoly derivative(const IntPoly& f);

// f(x + k).
IntPoly taylor_shift(const IntPoly& f, const mpz_class& k);

// gcd of all coefficients, nonnegative; 0 only for the zero polynomial.
mpz_class content(const IntPoly& f);

// f divided by its content; the sign of the leading coefficient is kept.
IntPoly primitive_part(const IntPoly& f);

// Quotient f/g when g divides f exactly in Z[x]; InternalDivisibility otherwise.
IntPoly divexact(const IntPoly& f, const IntPoly& g);

// Classical pseudo-remainder: rem(lc(g)^(deg f - deg g + 1) * f, g).
// The multiplier is always exactly lc(g)^(deg f - deg g + 1), so callers can
// undo its sign (Sturm chains depend on this).
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g);

// Primitive gcd with positive leading coefficient (primitive PRS over Z).
IntPoly gcd(const IntPoly& f, const IntPoly& g);

// f / gcd(f, f'): same distinct roots, no multiplicity. Primitive, positive
// leading coefficient. Throws ZeroPolynomial on the zero polynomial.
IntPoly squarefree_part(const IntPoly& f);

// Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f, as the
// Sylvester determinant computed by fraction-free (Bareiss) elimination.
// Throws ZeroPolynomial if either argument is zero.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n >= 1.
mpz_class discriminant(const IntPoly& f);

// Trace of the m-th power of the companion matrix of monic f: the m-th power
// sum of the roots, in exact integer arithmetic. Independent of the
// Newton-Girard route, which makes it the cross-check oracle for it.
mpz_class trace_power(const IntPoly& f, unsigned long m);

// "x^3 - 2*x + 1" style rendering; round-trips through the expression grammar.
std::string to_string(const IntPoly& f, const std::string& var = "x");
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

}

#endif
