#include "trw/symfun.hpp"

#include <cstddef>
#include <string>
#include <utility>

#include "trw/errors.hpp"

namespace trw {

namespace {

mpz_class scale(const mpz_class& v, long k) { return v * k; }
MultiParamPoly scale(const MultiParamPoly& v, long k) { return mul_scalar(v, mpz_class(k)); }

// Newton-Girard over any commutative ring with the operators used below.
// `coeffs` are a_0..a_n of a monic polynomial (a_n = 1); returns q_0..q_M
// with slot 0 unused.  With s_k the k-th elementary symmetric function
// (s_k = (-1)^k a_{n-k} for k <= n and 0 beyond the degree):
//   q_k = (-1)^{k-1} k s_k + sum_{i=1}^{k-1} (-1)^{k+i-1} s_{k-i} q_i
template <class R>
std::vector<R> newton_power_sums(const std::vector<R>& coeffs, unsigned M, const R& zero) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<R> s(M + 1, zero);
    for (unsigned k = 1; k <= M; ++k) {
        if (k <= n) {
            const R& a = coeffs[n - k];
            s[k] = (k % 2 == 0) ? a : -a;
        }
    }
    std::vector<R> q(M + 1, zero);
    for (unsigned k = 1; k <= M; ++k) {
        R acc = scale(s[k], k % 2 == 1 ? static_cast<long>(k) : -static_cast<long>(k));
        for (unsigned i = 1; i < k; ++i) {
            if ((k + i) % 2 == 1)
                acc = acc + s[k - i] * q[i];
            else
                acc = acc - s[k - i] * q[i];
        }
        q[k] = std::move(acc);
    }
    return q;
}

}  // namespace

PowerSums power_sums_from_coeffs(const IntPoly& f, unsigned M) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (!f.is_monic()) throw NotMonic("power sums are defined here for monic polynomials only");
    if (f.degree() < 1) throw DegreeTooSmall("power sums require degree >= 1");
    auto q = newton_power_sums<mpz_class>(f.coeffs(), M, mpz_class(0));
    PowerSums ps;
    ps.n = static_cast<unsigned>(f.degree());
    ps.values.assign(q.begin() + 1, q.end());
    return ps;
}

ElemSym elem_from_power_sums(const PowerSums& q, unsigned n) {
    if (q.values.size() < n)
        throw PreconditionViolated("need at least n power sums to recover e_1..e_n");
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} q_i, starting from e_0 = 1.
    std::vector<mpz_class> e(n + 1);
    e[0] = 1;
    for (unsigned k = 1; k <= n; ++k) {
        mpz_class acc = 0;
        for (unsigned i = 1; i <= k; ++i) {
            mpz_class t = e[k - i] * q.values[i - 1];
            if (i % 2 == 1)
                acc += t;
            else
                acc -= t;
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), k))
            throw NonIntegralDivision("k*e_k = " + acc.get_str() + " is not divisible by k = " +
                                      std::to_string(k));
        mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), k);
    }
    ElemSym es;
    es.values.assign(e.begin() + 1, e.end());
    return es;
}

MultiParamPoly q_m_param(const ParamXPoly& f, unsigned m) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (!f.is_monic()) throw NotMonic("power sums are defined here for monic polynomials only");
    if (f.degree() < 1) throw DegreeTooSmall("power sums require degree >= 1");
    if (m == 0) return MultiParamPoly::constant(f.params(), f.degree());
    auto q = newton_power_sums<MultiParamPoly>(f.coeffs(), m, MultiParamPoly(f.params()));
    return q[m];
}

IntPoly root_power_transform(const IntPoly& f, unsigned N) {
    if (N == 0) throw PreconditionViolated("root-power exponent must be >= 1");
    if (f.is_zero()) throw ZeroPolynomial();
    if (!f.is_monic()) throw NotMonic("root-power transform requires a monic polynomial");
    const int n = f.degree();
    if (n < 1) throw DegreeTooSmall("root-power transform requires degree >= 1");

    // Power sums of the N-th powers of the roots are the strided power sums
    // q_N, q_2N, ..., q_nN of f; from those the coefficients come back via
    // the inverse recurrence.  Everything stays in Z.
    PowerSums all = power_sums_from_coeffs(f, static_cast<unsigned>(n) * N);
    PowerSums strided;
    strided.n = static_cast<unsigned>(n);
    strided.values.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        strided.values.push_back(all.values[static_cast<std::size_t>(j) * N - 1]);
    ElemSym e = elem_from_power_sums(strided, static_cast<unsigned>(n));

    std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k <= n; ++k) {
        const mpz_class& ek = e.values[static_cast<std::size_t>(k) - 1];
        c[static_cast<std::size_t>(n - k)] = (k % 2 == 0) ? ek : -ek;
    }
    return IntPoly(std::move(c));
}

}  // namespace trw
