#include "trw/multiparam.hpp"

#include <sstream>
#include <utility>

#include "trw/errors.hpp"
#include "trw/intpoly.hpp"

namespace trw {

MultiParamPoly::MultiParamPoly(std::vector<std::string> params) : params_(std::move(params)) {}

MultiParamPoly MultiParamPoly::constant(std::vector<std::string> params, mpz_class value) {
    MultiParamPoly p(std::move(params));
    p.add_term(Exponents(p.params_.size(), 0), std::move(value));
    return p;
}

MultiParamPoly MultiParamPoly::param(std::vector<std::string> params, const std::string& name) {
    MultiParamPoly p(std::move(params));
    Exponents e(p.params_.size(), 0);
    e[p.param_index(name)] = 1;
    p.add_term(std::move(e), mpz_class(1));
    return p;
}

std::size_t MultiParamPoly::param_index(const std::string& name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name) return i;
    throw MissingParameter(name);
}

void MultiParamPoly::require_same_params(const MultiParamPoly& other) const {
    if (params_ != other.params_)
        throw PreconditionViolated("cannot combine polynomials over different parameter lists");
}

void MultiParamPoly::add_term(Exponents exps, mpz_class coeff) {
    if (exps.size() != params_.size())
        throw PreconditionViolated("exponent vector length does not match parameter count");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exps), std::move(coeff));
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

bool MultiParamPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (unsigned e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

mpz_class MultiParamPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant())
        throw PreconditionViolated("constant_value() on a non-constant polynomial");
    return terms_.begin()->second;
}

unsigned MultiParamPoly::degree_in(const std::string& name) const {
    std::size_t idx = param_index(name);
    unsigned d = 0;
    for (const auto& [e, c] : terms_)
        if (e[idx] > d) d = e[idx];
    return d;
}

unsigned MultiParamPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned x : e) s += x;
        if (s > d) d = s;
    }
    return d;
}

MultiParamPoly MultiParamPoly::operator-() const {
    MultiParamPoly r(params_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiParamPoly& MultiParamPoly::operator+=(const MultiParamPoly& rhs) {
    require_same_params(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MultiParamPoly& MultiParamPoly::operator-=(const MultiParamPoly& rhs) {
    require_same_params(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MultiParamPoly operator+(MultiParamPoly lhs, const MultiParamPoly& rhs) {
    lhs += rhs;
    return lhs;
}

MultiParamPoly operator-(MultiParamPoly lhs, const MultiParamPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

MultiParamPoly operator*(const MultiParamPoly& lhs, const MultiParamPoly& rhs) {
    lhs.require_same_params(rhs);
    MultiParamPoly r(lhs.params_);
    for (const auto& [ea, ca] : lhs.terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            MultiParamPoly::Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiParamPoly& lhs, const MultiParamPoly& rhs) {
    return lhs.params_ == rhs.params_ && lhs.terms_ == rhs.terms_;
}

mpz_class MultiParamPoly::instantiate(const std::map<std::string, mpz_class>& values) const {
    std::vector<const mpz_class*> vals(params_.size());
    for (std::size_t i = 0; i < params_.size(); ++i) {
        auto it = values.find(params_[i]);
        if (it == values.end()) throw MissingParameter(params_[i]);
        vals[i] = &it->second;
    }
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), vals[i]->get_mpz_t(), e[i]);
            term *= pw;
        }
        total += term;
    }
    return total;
}

namespace {

std::string monomial_str(const std::vector<std::string>& params,
                         const MultiParamPoly::Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += params[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string MultiParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const mpz_class& c = it->second;
        bool neg = c < 0;
        mpz_class mag = abs(c);
        std::string mono = monomial_str(params_, it->first);
        std::string body;
        if (mono.empty())
            body = mag.get_str();
        else if (mag == 1)
            body = mono;
        else
            body = mag.get_str() + "*" + mono;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += body;
    }
    return out;
}

MultiParamPoly mul_scalar(const MultiParamPoly& f, const mpz_class& s) {
    MultiParamPoly r(f.params());
    if (s == 0) return r;
    for (const auto& [e, c] : f.terms()) r.add_term(e, c * s);
    return r;
}

MultiParamPoly pow(const MultiParamPoly& base, unsigned exp) {
    MultiParamPoly acc = MultiParamPoly::constant(base.params(), 1);
    MultiParamPoly sq = base;
    while (exp > 0) {
        if (exp & 1u) acc = acc * sq;
        exp >>= 1u;
        if (exp > 0) sq = sq * sq;
    }
    return acc;
}

MultiParamPoly divexact(const MultiParamPoly& f, const MultiParamPoly& g) {
    if (g.is_zero()) throw InternalDivisibility("exact division by the zero polynomial");
    if (f.params() != g.params())
        throw PreconditionViolated("cannot combine polynomials over different parameter lists");
    MultiParamPoly q(f.params());
    MultiParamPoly r = f;
    const auto& glead = *g.terms().rbegin();  // lex-leading term
    while (!r.is_zero()) {
        const auto& rlead = *r.terms().rbegin();
        MultiParamPoly::Exponents diff(rlead.first.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            if (rlead.first[i] < glead.first[i])
                throw InternalDivisibility("multivariate division left a remainder");
            diff[i] = rlead.first[i] - glead.first[i];
        }
        if (!mpz_divisible_p(rlead.second.get_mpz_t(), glead.second.get_mpz_t()))
            throw InternalDivisibility("multivariate division left a remainder");
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rlead.second.get_mpz_t(), glead.second.get_mpz_t());
        MultiParamPoly t(f.params());
        t.add_term(std::move(diff), std::move(qc));
        q += t;
        r -= t * g;
    }
    return q;
}

MultiParamPoly divexact_int(const MultiParamPoly& f, const mpz_class& k) {
    if (k == 0) throw NonIntegralDivision("division by zero");
    MultiParamPoly r(f.params());
    for (const auto& [e, c] : f.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()))
            throw NonIntegralDivision("coefficient " + c.get_str() + " is not divisible by " +
                                      k.get_str());
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
        r.add_term(e, std::move(qc));
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const MultiParamPoly& p) {
    return os << p.to_string();
}

// ---------------------------------------------------------------------------
// ParamXPoly

ParamXPoly::ParamXPoly(std::vector<std::string> params) : params_(std::move(params)) {}

ParamXPoly::ParamXPoly(std::vector<std::string> params, std::vector<MultiParamPoly> coeffs)
    : params_(std::move(params)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.params() != params_)
            throw PreconditionViolated("coefficient parameter list does not match polynomial");
    trim();
}

ParamXPoly ParamXPoly::variable_x(std::vector<std::string> params) {
    ParamXPoly p(params);
    p.coeffs_.push_back(MultiParamPoly(params));  // x^0
    p.coeffs_.push_back(MultiParamPoly::constant(std::move(params), 1));
    return p;
}

ParamXPoly ParamXPoly::constant(std::vector<std::string> params, mpz_class value) {
    ParamXPoly p(params);
    p.coeffs_.push_back(MultiParamPoly::constant(std::move(params), std::move(value)));
    p.trim();
    return p;
}

ParamXPoly ParamXPoly::param(std::vector<std::string> params, const std::string& name) {
    return from_coeff(MultiParamPoly::param(std::move(params), name));
}

ParamXPoly ParamXPoly::from_coeff(MultiParamPoly c) {
    ParamXPoly p(c.params());
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

void ParamXPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void ParamXPoly::require_same_params(const ParamXPoly& other) const {
    if (params_ != other.params_)
        throw PreconditionViolated("cannot combine polynomials over different parameter lists");
}

const MultiParamPoly& ParamXPoly::coeff(std::size_t k) const {
    static thread_local MultiParamPoly zero;
    if (k < coeffs_.size()) return coeffs_[k];
    zero = MultiParamPoly(params_);
    return zero;
}

const MultiParamPoly& ParamXPoly::leading() const {
    if (coeffs_.empty()) throw ZeroPolynomial();
    return coeffs_.back();
}

bool ParamXPoly::is_monic() const {
    return !is_zero() && leading().is_constant() && leading().constant_value() == 1;
}

ParamXPoly ParamXPoly::operator-() const {
    ParamXPoly r(params_);
    r.coeffs_.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
    return r;
}

ParamXPoly& ParamXPoly::operator+=(const ParamXPoly& rhs) {
    require_same_params(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), MultiParamPoly(params_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

ParamXPoly& ParamXPoly::operator-=(const ParamXPoly& rhs) {
    require_same_params(rhs);
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size(), MultiParamPoly(params_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

ParamXPoly operator+(ParamXPoly lhs, const ParamXPoly& rhs) {
    lhs += rhs;
    return lhs;
}

ParamXPoly operator-(ParamXPoly lhs, const ParamXPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

ParamXPoly operator*(const ParamXPoly& lhs, const ParamXPoly& rhs) {
    lhs.require_same_params(rhs);
    ParamXPoly r(lhs.params_);
    if (lhs.is_zero() || rhs.is_zero()) return r;
    r.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, MultiParamPoly(lhs.params_));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            r.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    r.trim();
    return r;
}

bool operator==(const ParamXPoly& lhs, const ParamXPoly& rhs) {
    return lhs.params_ == rhs.params_ && lhs.coeffs_ == rhs.coeffs_;
}

IntPoly ParamXPoly::instantiate(const std::map<std::string, mpz_class>& values) const {
    std::vector<mpz_class> c;
    c.reserve(coeffs_.size());
    for (const auto& p : coeffs_) c.push_back(p.instantiate(values));
    return IntPoly(std::move(c));
}

std::string ParamXPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const MultiParamPoly& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        bool neg;
        std::string body;
        if (c.terms().size() == 1) {
            neg = c.terms().begin()->second < 0;
            body = (neg ? -c : c).to_string();
        } else {
            // Compound coefficient: parenthesize; hoist the sign only when
            // every term is negative, so "- (a + 3)*x" comes out naturally.
            neg = true;
            for (const auto& [e, cf] : c.terms())
                if (cf > 0) {
                    neg = false;
                    break;
                }
            body = "(" + (neg ? -c : c).to_string() + ")";
        }
        std::string term;
        if (k == 0) {
            term = body;
        } else {
            std::string xp = (k == 1) ? "x" : "x^" + std::to_string(k);
            term = (body == "1") ? xp : body + "*" + xp;
        }
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term;
    }
    return out;
}

ParamXPoly mul_scalar(const ParamXPoly& f, const mpz_class& s) {
    std::vector<MultiParamPoly> c;
    c.reserve(f.coeffs().size());
    for (const auto& p : f.coeffs()) c.push_back(mul_scalar(p, s));
    return ParamXPoly(f.params(), std::move(c));
}

ParamXPoly pow(const ParamXPoly& base, unsigned exp) {
    ParamXPoly acc = ParamXPoly::constant(base.params(), 1);
    ParamXPoly sq = base;
    while (exp > 0) {
        if (exp & 1u) acc = acc * sq;
        exp >>= 1u;
        if (exp > 0) sq = sq * sq;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, const ParamXPoly& p) {
    return os << p.to_string();
}

}  // namespace trw
