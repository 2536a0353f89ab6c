#ifndef TRW_MULTIPARAM_HPP
#define TRW_MULTIPARAM_HPP

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "trw/errors.hpp"

namespace trw {

class IntPoly;

// Sparse polynomial in a fixed, ordered list of integer parameters, with
// mpz coefficients.  Terms are keyed by exponent vectors (one slot per
// parameter, in the order given at construction); the map's lexicographic
// key order doubles as the monomial order, so iteration is deterministic.
class MultiParamPoly {
  public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, mpz_class>;

    MultiParamPoly() = default;  // zero polynomial over no parameters
    explicit MultiParamPoly(std::vector<std::string> params);

    static MultiParamPoly constant(std::vector<std::string> params, mpz_class value);
    // The parameter itself as a degree-1 monomial; throws MissingParameter
    // if `name` is not in `params`.
    static MultiParamPoly param(std::vector<std::string> params, const std::string& name);

    const std::vector<std::string>& params() const { return params_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value of a constant polynomial (0 for the zero polynomial); throws
    // PreconditionViolated if any parameter actually occurs.
    mpz_class constant_value() const;
    unsigned degree_in(const std::string& name) const;
    unsigned total_degree() const;

    MultiParamPoly operator-() const;
    MultiParamPoly& operator+=(const MultiParamPoly& rhs);
    MultiParamPoly& operator-=(const MultiParamPoly& rhs);
    friend MultiParamPoly operator+(MultiParamPoly lhs, const MultiParamPoly& rhs);
    friend MultiParamPoly operator-(MultiParamPoly lhs, const MultiParamPoly& rhs);
    friend MultiParamPoly operator*(const MultiParamPoly& lhs, const MultiParamPoly& rhs);
    friend bool operator==(const MultiParamPoly& lhs, const MultiParamPoly& rhs);
    friend bool operator!=(const MultiParamPoly& lhs, const MultiParamPoly& rhs) {
        return !(lhs == rhs);
    }

    // Plug in integer values for every parameter (extra entries are ignored;
    // a missing one throws MissingParameter).
    mpz_class instantiate(const std::map<std::string, mpz_class>& values) const;

    // Descending-lex term order, e.g. "4*a^2 + 2" or "n^3 + 2*n^2 + 3*n + 3".
    std::string to_string() const;

    // Term insertion used by builders; drops zero coefficients.
    void add_term(Exponents exps, mpz_class coeff);

  private:
    std::vector<std::string> params_;
    TermMap terms_;

    std::size_t param_index(const std::string& name) const;  // throws MissingParameter
    void require_same_params(const MultiParamPoly& other) const;
};

MultiParamPoly mul_scalar(const MultiParamPoly& f, const mpz_class& s);
MultiParamPoly pow(const MultiParamPoly& base, unsigned exp);
// Exact division in Z[params]; throws InternalDivisibility when the division
// does not come out exact (which would indicate a broken caller invariant).
MultiParamPoly divexact(const MultiParamPoly& f, const MultiParamPoly& g);
// Divide every coefficient by an integer, exactly; throws NonIntegralDivision.
MultiParamPoly divexact_int(const MultiParamPoly& f, const mpz_class& k);

std::ostream& operator<<(std::ostream& os, const MultiParamPoly& p);

// Polynomial in the distinguished variable x whose coefficients live in
// Z[params].  This is the shape of a parametrized family: instantiating the
// parameters yields a plain IntPoly.
class ParamXPoly {
  public:
    ParamXPoly() = default;  // zero over no parameters
    explicit ParamXPoly(std::vector<std::string> params);
    ParamXPoly(std::vector<std::string> params, std::vector<MultiParamPoly> coeffs);

    static ParamXPoly variable_x(std::vector<std::string> params);
    static ParamXPoly constant(std::vector<std::string> params, mpz_class value);
    static ParamXPoly param(std::vector<std::string> params, const std::string& name);
    static ParamXPoly from_coeff(MultiParamPoly c);  // degree 0 in x

    const std::vector<std::string>& params() const { return params_; }
    const std::vector<MultiParamPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of x^k (zero polynomial beyond the degree).
    const MultiParamPoly& coeff(std::size_t k) const;
    const MultiParamPoly& leading() const;  // throws ZeroPolynomial
    bool is_monic() const;

    ParamXPoly operator-() const;
    ParamXPoly& operator+=(const ParamXPoly& rhs);
    ParamXPoly& operator-=(const ParamXPoly& rhs);
    friend ParamXPoly operator+(ParamXPoly lhs, const ParamXPoly& rhs);
    friend ParamXPoly operator-(ParamXPoly lhs, const ParamXPoly& rhs);
    friend ParamXPoly operator*(const ParamXPoly& lhs, const ParamXPoly& rhs);
    friend bool operator==(const ParamXPoly& lhs, const ParamXPoly& rhs);
    friend bool operator!=(const ParamXPoly& lhs, const ParamXPoly& rhs) {
        return !(lhs == rhs);
    }

    IntPoly instantiate(const std::map<std::string, mpz_class>& values) const;

    // Descending powers of x; compound coefficients are parenthesized,
    // e.g. "x^3 - a*x^2 - (a + 3)*x - 1".
    std::string to_string() const;

  private:
    std::vector<std::string> params_;
    std::vector<MultiParamPoly> coeffs_;  // ascending by power of x

    void trim();
    void require_same_params(const ParamXPoly& other) const;
};

ParamXPoly mul_scalar(const ParamXPoly& f, const mpz_class& s);
ParamXPoly pow(const ParamXPoly& base, unsigned exp);

std::ostream& operator<<(std::ostream& os, const ParamXPoly& p);

}  // namespace trw

#endif
