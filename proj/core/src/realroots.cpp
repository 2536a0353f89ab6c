#include "trw/realroots.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "trw/errors.hpp"

namespace trw {

namespace {

int sign_at_neg_inf(const IntPoly& g) {
    int s = sgn(g.leading());
    return (g.degree() % 2 == 0) ? s : -s;
}

int sign_at_pos_inf(const IntPoly& g) { return sgn(g.leading()); }

unsigned variations(const std::vector<int>& signs) {
    unsigned v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

unsigned count_at_infinity(const std::vector<IntPoly>& chain) {
    std::vector<int> left, right;
    left.reserve(chain.size());
    right.reserve(chain.size());
    for (const IntPoly& g : chain) {
        left.push_back(sign_at_neg_inf(g));
        right.push_back(sign_at_pos_inf(g));
    }
    return variations(left) - variations(right);
}

unsigned count_on_interval(const std::vector<IntPoly>& chain, const mpq_class& lo,
                           const mpq_class& hi) {
    if (!(lo < hi)) throw PreconditionViolated("interval endpoints must satisfy lo < hi");
    if (sign_at(chain.front(), lo) == 0)
        throw EndpointIsRoot("left endpoint is a root of the polynomial");
    if (sign_at(chain.front(), hi) == 0)
        throw EndpointIsRoot("right endpoint is a root of the polynomial");
    std::vector<int> left, right;
    left.reserve(chain.size());
    right.reserve(chain.size());
    for (const IntPoly& g : chain) {
        left.push_back(sign_at(g, lo));
        right.push_back(sign_at(g, hi));
    }
    return variations(left) - variations(right);
}

}  // namespace

SturmChain sturm_chain(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 1) throw DegreeTooSmall("Sturm chains require degree >= 1");

    SturmChain sc;
    IntPoly g0 = squarefree_part(f);
    sc.chain.push_back(g0);
    if (g0.degree() < 1) return sc;
    sc.chain.push_back(primitive_part(derivative(g0)));

    while (sc.chain.back().degree() >= 1) {
        const IntPoly& prev = sc.chain[sc.chain.size() - 2];
        const IntPoly& cur = sc.chain.back();
        IntPoly rem = pseudo_rem(prev, cur);
        if (rem.is_zero()) break;  // cannot happen for a squarefree start
        // pseudo_rem scaled the true remainder by lc(cur)^(deg prev - deg cur + 1);
        // flip so the result is a positive multiple of the negated remainder.
        long delta = prev.degree() - cur.degree();
        int mult_sign = (sgn(cur.leading()) < 0 && (delta + 1) % 2 != 0) ? -1 : 1;
        sc.chain.push_back(primitive_part(mult_sign < 0 ? rem : -rem));
    }
    return sc;
}

int sign_at(const IntPoly& f, const mpq_class& point) {
    if (f.is_zero()) throw ZeroPolynomial();
    const mpz_class& p = point.get_num();
    const mpz_class& q = point.get_den();  // canonical, > 0
    const int n = f.degree();
    mpz_class val = f.coeff(static_cast<std::size_t>(n));
    mpz_class qpow = 1;
    for (int i = n - 1; i >= 0; --i) {
        qpow *= q;
        val = val * p + f.coeff(static_cast<std::size_t>(i)) * qpow;
    }
    return sgn(val);
}

unsigned count_real_roots(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() == 0) return 0;
    return count_at_infinity(sturm_chain(f).chain);
}

unsigned count_real_roots(const IntPoly& f, const mpq_class& lo, const mpq_class& hi) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() == 0) {
        if (!(lo < hi)) throw PreconditionViolated("interval endpoints must satisfy lo < hi");
        return 0;
    }
    return count_on_interval(sturm_chain(f).chain, lo, hi);
}

bool is_totally_real(const IntPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 1) throw DegreeTooSmall("totally-real test requires degree >= 1");
    auto chain = sturm_chain(f).chain;
    return count_at_infinity(chain) == static_cast<unsigned>(chain.front().degree());
}

bool all_roots_in(const IntPoly& f, const mpq_class& lo, const mpq_class& hi) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 1) throw DegreeTooSmall("root confinement test requires degree >= 1");
    auto chain = sturm_chain(f).chain;
    unsigned inside = count_on_interval(chain, lo, hi);
    return inside == static_cast<unsigned>(chain.front().degree());
}

std::vector<IntPoly> filter_box(const std::vector<IntPoly>& polys, const mpq_class& t) {
    if (!(t > 0)) throw PreconditionViolated("box bound t must be positive");
    std::vector<IntPoly> out;
    for (const IntPoly& p : polys)
        if (all_roots_in(p, mpq_class(0), t)) out.push_back(p);
    return out;
}

ApproxRoots approx_roots(const IntPoly& f, double tol) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (f.degree() < 1) throw DegreeTooSmall("root approximation requires degree >= 1");
    if (!(tol > 0)) throw PreconditionViolated("tolerance must be positive");

    IntPoly g = squarefree_part(f);
    const int n = g.degree();
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    const double lead = g.leading().get_d();
    for (int i = 0; i <= n; ++i)
        c[static_cast<std::size_t>(i)] = g.coeff(static_cast<std::size_t>(i)).get_d() / lead;

    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0.0;
        for (int i = n; i >= 0; --i) v = v * z + c[static_cast<std::size_t>(i)];
        return v;
    };
    auto scale_at = [&](std::complex<double> z) {
        double m = std::abs(z), zp = 1.0, s = 0.0;
        for (int i = 0; i <= n; ++i) {
            s += std::fabs(c[static_cast<std::size_t>(i)]) * zp;
            zp *= m;
        }
        return s;
    };

    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::fabs(c[static_cast<std::size_t>(i)]));
    radius += 1.0;

    // Deterministic starting points spread on a circle, angle-offset so no
    // starting point sits on a symmetry axis of the root set.
    constexpr double kTwoPi = 6.283185307179586;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double theta = kTwoPi * k / n + 0.7;
        z[static_cast<std::size_t>(k)] =
            0.9 * radius * std::complex<double>(std::cos(theta), std::sin(theta));
    }

    const int budget = 1000;
    bool done = false;
    for (int it = 0; it < budget && !done; ++it) {
        for (int k = 0; k < n; ++k) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k)
                    denom *= z[static_cast<std::size_t>(k)] - z[static_cast<std::size_t>(j)];
            if (denom == std::complex<double>(0.0, 0.0)) {
                // collided starting points: nudge and carry on
                z[static_cast<std::size_t>(k)] += std::complex<double>(1e-6, 1e-6);
                continue;
            }
            z[static_cast<std::size_t>(k)] -= eval(z[static_cast<std::size_t>(k)]) / denom;
        }
        done = true;
        for (int k = 0; k < n; ++k) {
            if (std::abs(eval(z[static_cast<std::size_t>(k)])) >
                tol * (1.0 + scale_at(z[static_cast<std::size_t>(k)]))) {
                done = false;
                break;
            }
        }
    }
    if (!done) throw NonConvergence("simultaneous iteration did not reach the residual bound");

    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    ApproxRoots out;
    out.roots = z;
    out.residuals.reserve(z.size());
    for (const auto& r : z) {
        out.residuals.push_back(std::abs(eval(r)));
        out.bound = std::max(out.bound, tol * (1.0 + scale_at(r)));
    }
    return out;
}

}  // namespace trw
