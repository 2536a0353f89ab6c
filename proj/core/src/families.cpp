#include "trw/families.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <utility>

#include "trw/errors.hpp"
#include "trw/realroots.hpp"
#include "trw/symfun.hpp"
#include "trw/version.hpp"
#include "bareiss.hpp"
#include "parallel.hpp"

namespace trw {

ParamFamily make_family(std::string name, std::vector<std::string> params, unsigned degree,
                        ParamXPoly poly, std::vector<ParamRange> default_ranges,
                        std::string provenance) {
    if (poly.params() != params)
        throw PreconditionViolated("family polynomial parameter list does not match the family");
    if (default_ranges.size() != params.size())
        throw PreconditionViolated("one default range per parameter required");
    for (std::size_t i = 0; i < default_ranges.size(); ++i)
        if (default_ranges[i].lo > default_ranges[i].hi)
            throw PreconditionViolated("empty default range for parameter " + params[i]);
    if (poly.is_zero()) throw ZeroPolynomial("family polynomial is zero");
    if (!poly.is_monic())
        throw HypothesisViolation("monic", "leading coefficient of " + poly.to_string() +
                                               " is not the constant 1");
    if (poly.degree() < 2)
        throw HypothesisViolation("degree >= 2",
                                  "family polynomial has degree " + std::to_string(poly.degree()));
    if (degree != static_cast<unsigned>(poly.degree()))
        throw WrongDegree("declared degree " + std::to_string(degree) +
                          " does not match polynomial degree " + std::to_string(poly.degree()));
    const MultiParamPoly& p0 = poly.coeff(0);
    if (!p0.is_constant() || (p0.constant_value() != 1 && p0.constant_value() != -1))
        throw HypothesisViolation("constant term +1 or -1", "p_0 = " + p0.to_string());
    bool any_nonconstant = false;
    for (unsigned j = 1; j < degree; ++j)
        if (!poly.coeff(j).is_constant()) {
            any_nonconstant = true;
            break;
        }
    if (!any_nonconstant)
        throw HypothesisViolation("some nonconstant middle coefficient",
                                  "p_1 .. p_" + std::to_string(degree - 1) +
                                      " are all constant in the parameters");
    ParamFamily fam;
    fam.name = std::move(name);
    fam.params = std::move(params);
    fam.degree = degree;
    fam.poly = std::move(poly);
    fam.default_ranges = std::move(default_ranges);
    fam.provenance = std::move(provenance);
    return fam;
}

namespace {

MultiParamPoly C(const std::vector<std::string>& ps, long v) {
    return MultiParamPoly::constant(ps, v);
}

ParamFamily mruv_family() {
    std::vector<std::string> ps{"a"};
    MultiParamPoly a = MultiParamPoly::param(ps, "a");
    std::vector<MultiParamPoly> cs{C(ps, -1), mul_scalar(a, -2), C(ps, 1)};
    return make_family(
        "mruv_quadratic", ps, 2, ParamXPoly(ps, std::move(cs)), {{-100, 100}},
        "quadratic unit family x^2 - 2a*x - 1; roots a +/- sqrt(a^2+1) are fundamental "
        "units of real quadratic orders");
}

ParamFamily shanks_family() {
    std::vector<std::string> ps{"a"};
    MultiParamPoly a = MultiParamPoly::param(ps, "a");
    std::vector<MultiParamPoly> cs{C(ps, -1), -(a + C(ps, 3)), -a, C(ps, 1)};
    return make_family("shanks_cubic", ps, 3, ParamXPoly(ps, std::move(cs)), {{-1, 50}},
                       "Shanks' simplest cubic fields; cyclic and totally real for a >= -1");
}

ParamFamily kishi_family() {
    std::vector<std::string> ps{"n"};
    MultiParamPoly n = MultiParamPoly::param(ps, "n");
    MultiParamPoly n2 = n * n;
    MultiParamPoly c2 = -(n * (n2 + n + C(ps, 3)) * (n2 + C(ps, 2)));
    MultiParamPoly c1 = -(n * n2 + mul_scalar(n2, 2) + mul_scalar(n, 3) + C(ps, 3));
    std::vector<MultiParamPoly> cs{C(ps, -1), std::move(c1), std::move(c2), C(ps, 1)};
    return make_family("kishi_cubic", ps, 3, ParamXPoly(ps, std::move(cs)), {{-20, 20}},
                       "Kishi's cyclic cubic family; the default range is a desk-scale choice");
}

ParamFamily gras_quartic_family() {
    std::vector<std::string> ps{"t"};
    MultiParamPoly t = MultiParamPoly::param(ps, "t");
    std::vector<MultiParamPoly> cs{C(ps, 1), t, C(ps, -6), -t, C(ps, 1)};
    return make_family("gras_quartic", ps, 4, ParamXPoly(ps, std::move(cs)), {{4, 60}},
                       "Gras cyclic quartic family; totally real for t >= 4");
}

ParamFamily lehmer_family() {
    std::vector<std::string> ps{"a"};
    MultiParamPoly a = MultiParamPoly::param(ps, "a");
    MultiParamPoly a2 = a * a;
    MultiParamPoly a3 = a2 * a;
    MultiParamPoly a4 = a2 * a2;
    MultiParamPoly c1 = a3 + mul_scalar(a2, 4) + mul_scalar(a, 10) + C(ps, 10);
    MultiParamPoly c2 = a4 + mul_scalar(a3, 5) + mul_scalar(a2, 11) + mul_scalar(a, 15) + C(ps, 5);
    MultiParamPoly c3 = -(mul_scalar(a3, 2) + mul_scalar(a2, 6) + mul_scalar(a, 10) + C(ps, 10));
    std::vector<MultiParamPoly> cs{C(ps, 1),      std::move(c1), std::move(c2),
                                   std::move(c3), std::move(a2), C(ps, 1)};
    return make_family("lehmer_quintic", ps, 5, ParamXPoly(ps, std::move(cs)), {{-20, 20}},
                       "Emma Lehmer's quintic family; the default range is a desk-scale choice");
}

ParamFamily gras_sextic_family() {
    std::vector<std::string> ps{"a"};
    MultiParamPoly a = MultiParamPoly::param(ps, "a");
    MultiParamPoly c5 = mul_scalar(a - C(ps, 1), -2);
    MultiParamPoly c4 = mul_scalar(a + C(ps, 2), -5);
    MultiParamPoly c2 = mul_scalar(a - C(ps, 1), 5);
    MultiParamPoly c1 = mul_scalar(a, 2) + C(ps, 4);
    std::vector<MultiParamPoly> cs{C(ps, 1),      std::move(c1), std::move(c2), C(ps, -20),
                                   std::move(c4), std::move(c5), C(ps, 1)};
    return make_family("gras_sextic", ps, 6, ParamXPoly(ps, std::move(cs)), {{7, 60}},
                       "Gras sextic family; totally real for a >= 7");
}

}  // namespace

const std::vector<ParamFamily>& registry() {
    static const std::vector<ParamFamily> fams = [] {
        std::vector<ParamFamily> v;
        v.push_back(mruv_family());
        v.push_back(shanks_family());
        v.push_back(kishi_family());
        v.push_back(gras_quartic_family());
        v.push_back(lehmer_family());
        v.push_back(gras_sextic_family());
        return v;
    }();
    return fams;
}

InstanceResult verify_instance(const ParamFamily& fam,
                               const std::map<std::string, mpz_class>& assignment) {
    InstanceResult r;
    for (const std::string& p : fam.params) {
        auto it = assignment.find(p);
        if (it == assignment.end()) throw MissingParameter(p);
        r.assignment[p] = it->second;
    }
    IntPoly inst = fam.poly.instantiate(r.assignment);
    r.degree_ok = inst.degree() == static_cast<int>(fam.degree);
    r.unit_constant = inst.coeff(0) == 1 || inst.coeff(0) == -1;
    r.totally_real = is_totally_real(inst);
    return r;
}

FamilyReport verify_range(const ParamFamily& fam, const std::vector<ParamRange>& ranges_in,
                          unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<ParamRange>& ranges =
        ranges_in.empty() ? fam.default_ranges : ranges_in;
    if (ranges.size() != fam.params.size())
        throw PreconditionViolated("one range per family parameter required");

    std::vector<std::uint64_t> sizes(ranges.size());
    mpz_class total = 1;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
        if (ranges[i].lo > ranges[i].hi)
            throw PreconditionViolated("empty range for parameter " + fam.params[i]);
        mpz_class sz = ranges[i].hi - ranges[i].lo + 1;
        total *= sz;
    }
    if (!total.fits_ulong_p())
        throw PreconditionViolated("parameter box holds too many instances to enumerate");
    const std::uint64_t count = total.get_ui();
    for (std::size_t i = 0; i < ranges.size(); ++i)
        sizes[i] = mpz_class(ranges[i].hi - ranges[i].lo + 1).get_ui();
    std::vector<std::uint64_t> stride(ranges.size(), 1);
    for (std::size_t i = ranges.size(); i-- > 1;) stride[i - 1] = stride[i] * sizes[i];

    auto assignment_at = [&](std::uint64_t index) {
        std::map<std::string, mpz_class> asg;
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            std::uint64_t off = (index / stride[i]) % sizes[i];
            asg[fam.params[i]] = ranges[i].lo + mpz_class(static_cast<unsigned long>(off));
        }
        return asg;
    };

    std::uint64_t workers64 = jobs == 0 ? 1 : jobs;
    if (workers64 > count) workers64 = count;
    const unsigned J = static_cast<unsigned>(workers64);

    // Per-worker failure buckets: index i is always handled by worker i % J,
    // so bucket i % J is touched by exactly one thread.
    std::vector<std::vector<std::pair<std::uint64_t, InstanceResult>>> buckets(J);
    detail::parallel_for(count, J, [&](std::uint64_t i) {
        InstanceResult res = verify_instance(fam, assignment_at(i));
        if (!res.ok()) buckets[i % J].emplace_back(i, std::move(res));
    });

    std::vector<std::pair<std::uint64_t, InstanceResult>> flat;
    for (auto& b : buckets)
        for (auto& e : b) flat.push_back(std::move(e));
    std::sort(flat.begin(), flat.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    FamilyReport rep;
    rep.family = fam.name;
    rep.ranges = ranges;
    rep.instances = count;
    rep.failures.reserve(flat.size());
    for (auto& e : flat) rep.failures.push_back(std::move(e.second));
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                               start)
                         .count();
    rep.tool_version = version;
    return rep;
}

unsigned find_witness_k(const ParamFamily& fam, unsigned N) {
    if (fam.params.size() != 1)
        throw PreconditionViolated("witness search requires a one-parameter family");
    if (N == 0) throw PreconditionViolated("torsion half-order N must be >= 1");
    for (unsigned k = 1; k <= fam.degree; ++k)
        if (!q_m_param(fam.poly, k * N).is_constant()) return k;
    throw NoWitnessInRange("no nonconstant power sum Q_{kN} for k <= " +
                           std::to_string(fam.degree) + " at N = " + std::to_string(N) +
                           "; a family hypothesis must be violated");
}

WitnessReport build_witness(const ParamFamily& fam, unsigned N) {
    const unsigned k = find_witness_k(fam, 2 * N);
    const unsigned exponent = 2 * N * k;
    MultiParamPoly witness = q_m_param(fam.poly, exponent);

    // Self-check: the witness evaluated at a parameter value must equal the
    // sum of exponent-th root powers of the instance, computed the long way
    // round through the companion matrix.
    const ParamRange& range = fam.default_ranges[0];
    std::vector<mpz_class> samples{range.lo, range.lo + (range.hi - range.lo) / 2, range.hi};
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    for (const mpz_class& a : samples) {
        std::map<std::string, mpz_class> asg{{fam.params[0], a}};
        mpz_class via_witness = witness.instantiate(asg);
        mpz_class via_trace = trace_power(fam.poly.instantiate(asg), exponent);
        if (via_witness != via_trace)
            throw Error("witness self-check failed for " + fam.name + " at " + fam.params[0] +
                        " = " + a.get_str());
    }

    WitnessReport rep;
    rep.family = fam.name;
    rep.N = N;
    rep.k = k;
    rep.exponent = exponent;
    rep.witness = std::move(witness);
    rep.nonconstant = !rep.witness.is_constant();
    return rep;
}

namespace {

// r + s*sqrt(d), exact.
struct QuadInt {
    mpz_class r;
    mpz_class s;
};

QuadInt qmul(const QuadInt& x, const QuadInt& y, const mpz_class& d) {
    return QuadInt{x.r * y.r + x.s * y.s * d, x.r * y.s + x.s * y.r};
}

}  // namespace

IntPoly gen_quartic_2param(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
    if (d <= 0) throw NotSquarefree("d must be a positive squarefree integer, got " + d.get_str());
    for (mpz_class p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0)
            throw NotSquarefree("d = " + d.get_str() + " is divisible by the square of " +
                                p.get_str());

    // Expand (x^2 - 2*theta*x - 1)(x^2 - 2*theta_bar*x - 1) exactly in
    // Z[sqrt(d)], theta = a + b*sqrt(d).  The sqrt(d) components of the
    // product must cancel, leaving the integer quartic.
    const QuadInt theta{a, b};
    const QuadInt theta_bar{a, -b};
    auto factor = [&](const QuadInt& th) {
        return std::vector<QuadInt>{QuadInt{-1, 0}, QuadInt{-2 * th.r, -2 * th.s},
                                    QuadInt{1, 0}};
    };
    std::vector<QuadInt> f1 = factor(theta);
    std::vector<QuadInt> f2 = factor(theta_bar);
    std::vector<QuadInt> prod(5, QuadInt{0, 0});
    for (std::size_t i = 0; i < f1.size(); ++i)
        for (std::size_t j = 0; j < f2.size(); ++j) {
            QuadInt t = qmul(f1[i], f2[j], d);
            prod[i + j].r += t.r;
            prod[i + j].s += t.s;
        }
    std::vector<mpz_class> coeffs(5);
    for (std::size_t i = 0; i < prod.size(); ++i) {
        if (prod[i].s != 0)
            throw Error("sqrt(d) component failed to cancel in the quartic expansion");
        coeffs[i] = prod[i].r;
    }
    return IntPoly(std::move(coeffs));
}

namespace {

struct MultiParamOps {
    static bool is_zero(const MultiParamPoly& p) { return p.is_zero(); }
    static MultiParamPoly exact_div(const MultiParamPoly& a, const MultiParamPoly& b) {
        return divexact(a, b);
    }
};

// Res_y(A, B) for polynomials in y with MultiParamPoly coefficients
// (ascending order, exact degrees).  Same Sylvester layout and sign
// convention as the univariate resultant.
MultiParamPoly resultant_y(const std::vector<MultiParamPoly>& A,
                           const std::vector<MultiParamPoly>& B, const MultiParamPoly& one) {
    const std::size_t n = A.size() - 1;
    const std::size_t m = B.size() - 1;
    if (n == 0) return pow(A[0], static_cast<unsigned>(m));
    if (m == 0) return pow(B[0], static_cast<unsigned>(n));
    const std::size_t size = n + m;
    MultiParamPoly zero = one - one;
    std::vector<std::vector<MultiParamPoly>> s(size, std::vector<MultiParamPoly>(size, zero));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t i = 0; i <= n; ++i) s[row][row + i] = A[n - i];
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t i = 0; i <= m; ++i) s[m + row][row + i] = B[m - i];
    return detail::bareiss_determinant<MultiParamPoly, MultiParamOps>(std::move(s), one);
}

}  // namespace

ParamFamily gen_unit_family(const MultiParamPoly& h, const IntPoly& alpha_minpoly) {
    if (h.params().size() != 2)
        throw PreconditionViolated("h must be a polynomial in exactly two parameters");
    const std::string& t1 = h.params()[0];
    const std::string& t2 = h.params()[1];
    if (t1 == "x" || t2 == "x")
        throw PreconditionViolated("parameter name 'x' is reserved for the polynomial variable");

    if (alpha_minpoly.is_zero()) throw ZeroPolynomial("alpha minimal polynomial is zero");
    if (!alpha_minpoly.is_monic()) throw NotMonic("alpha minimal polynomial must be monic");
    const int na = alpha_minpoly.degree();
    if (na < 1) throw DegreeTooSmall("alpha minimal polynomial must have degree >= 1");
    if (!is_totally_real(alpha_minpoly))
        throw AlphaNotTotallyReal("alpha minimal polynomial " + to_string(alpha_minpoly) +
                                  " has non-real roots");
    if (h.degree_in(t1) == 0)
        throw DegreeConstraintViolated("h must have positive degree in " + t1);
    if (h.degree_in(t2) != static_cast<unsigned>(na - 1))
        throw DegreeConstraintViolated(
            "h must have degree exactly " + std::to_string(na - 1) + " in " + t2 +
            " (one less than the degree of the alpha minimal polynomial), got " +
            std::to_string(h.degree_in(t2)));

    // Work in Z[t1, x]; y is the resultant variable.  B = x^2 - 2h(t1,y)x - 1
    // grouped by powers of y, A = alpha_minpoly lifted to constants.
    const std::vector<std::string> work_params{t1, "x"};
    const unsigned degy = h.degree_in(t2);
    std::vector<MultiParamPoly> B(degy + 1, MultiParamPoly(work_params));
    for (const auto& [e, c] : h.terms())
        B[e[1]].add_term({e[0], 1}, -2 * c);
    B[0].add_term({0, 2}, 1);
    B[0].add_term({0, 0}, -1);

    std::vector<MultiParamPoly> A;
    A.reserve(static_cast<std::size_t>(na) + 1);
    for (int j = 0; j <= na; ++j)
        A.push_back(MultiParamPoly::constant(work_params,
                                             alpha_minpoly.coeff(static_cast<std::size_t>(j))));

    MultiParamPoly res =
        resultant_y(A, B, MultiParamPoly::constant(work_params, 1));

    // Reinterpret Z[t1, x] as polynomials in x over Z[t1].
    const std::vector<std::string> fam_params{t1};
    const unsigned fam_degree = 2 * static_cast<unsigned>(na);
    std::vector<MultiParamPoly> xcoeffs(fam_degree + 1, MultiParamPoly(fam_params));
    for (const auto& [e, c] : res.terms()) {
        if (e[1] > fam_degree)
            throw Error("resultant degree in x exceeds the expected family degree");
        xcoeffs[e[1]].add_term({e[0]}, c);
    }

    return make_family("generated_unit_family", fam_params, fam_degree,
                       ParamXPoly(fam_params, std::move(xcoeffs)), {{-10, 10}},
                       "generated: product of x^2 - 2h(" + t1 + ",alpha)x - 1 over the roots of " +
                           to_string(alpha_minpoly) + ", h = " + h.to_string());
}

bool cyclic_cubic_check(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() != 3)
        throw WrongDegree("cyclic cubic check requires degree 3, got degree " +
                          std::to_string(f.degree()));
    if (!f.is_monic()) throw NotMonic("cyclic cubic check requires a monic polynomial");
    mpz_class disc = discriminant(f);
    return disc > 0 && mpz_perfect_square_p(disc.get_mpz_t()) != 0;
}

}  // namespace trw
