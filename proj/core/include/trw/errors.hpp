#ifndef TRW_ERRORS_HPP
#define TRW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trw {

// Base class for every error raised by the toolkit, so callers can catch
// everything trw-specific in one handler and still discriminate by type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
    explicit ZeroPolynomial(const std::string& what) : Error(what) {}
};

struct NotMonic : Error {
    explicit NotMonic(const std::string& what = "polynomial must be monic") : Error(what) {}
};

struct DegreeTooSmall : Error {
    explicit DegreeTooSmall(const std::string& what = "polynomial degree too small") : Error(what) {}
};

struct WrongDegree : Error {
    explicit WrongDegree(const std::string& what) : Error(what) {}
};

struct MissingParameter : Error {
    explicit MissingParameter(const std::string& name)
        : Error("no value supplied for parameter '" + name + "'"), parameter(name) {}
    std::string parameter;
};

// Raised when the inverse Newton recurrence hits a division k | x that does
// not come out exact: the input is not the power-sum sequence of a monic
// integer polynomial.
struct NonIntegralDivision : Error {
    explicit NonIntegralDivision(const std::string& what) : Error(what) {}
};

// An exactness assertion failed in a place that is unreachable for valid
// input; indicates a bug rather than bad data.
struct InternalDivisibility : Error {
    explicit InternalDivisibility(const std::string& what) : Error(what) {}
};

struct EndpointIsRoot : Error {
    explicit EndpointIsRoot(const std::string& what = "interval endpoint is a root") : Error(what) {}
};

struct NonConvergence : Error {
    explicit NonConvergence(const std::string& what = "root refinement did not converge") : Error(what) {}
};

// Parse error in a family document or polynomial expression. Positions are
// 1-based; `expected` describes the token class the parser wanted.
struct SyntaxError : Error {
    SyntaxError(std::size_t line, std::size_t column, const std::string& expected,
                const std::string& found)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": expected " + expected + ", found " + found),
          line(line), column(column), expected(expected), found(found) {}
    std::size_t line;
    std::size_t column;
    std::string expected;
    std::string found;
};

// A family definition that parses but does not satisfy the hypotheses a
// parametrized family must meet (monic, constant term +-1, some nonconstant
// middle coefficient, degree >= 2).
struct HypothesisViolation : Error {
    HypothesisViolation(const std::string& hypothesis, const std::string& detail)
        : Error("family hypothesis violated (" + hypothesis + "): " + detail),
          hypothesis(hypothesis), detail(detail) {}
    std::string hypothesis;
    std::string detail;
};

struct NoWitnessInRange : Error {
    explicit NoWitnessInRange(const std::string& what) : Error(what) {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& what) : Error(what) {}
};

struct AlphaNotTotallyReal : Error {
    explicit AlphaNotTotallyReal(const std::string& what) : Error(what) {}
};

struct DegreeConstraintViolated : Error {
    explicit DegreeConstraintViolated(const std::string& what) : Error(what) {}
};

struct NotEventuallySigned : Error {
    explicit NotEventuallySigned(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

}

#endif
