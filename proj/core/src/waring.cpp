#include "trw/waring.hpp"

#include <cmath>
#include <cstdint>
#include <cstddef>

#include "trw/errors.hpp"
#include "parallel.hpp"

namespace trw {

namespace {

std::uint64_t isqrt64(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Largest-first four-square DFS over machine words; valid while the
// intermediate products stay far from overflow.
bool four_sq_u64(std::uint64_t m, int parts_left, std::uint64_t cap,
                 std::array<std::uint64_t, 4>& out, int idx) {
    if (parts_left == 0) return m == 0;
    std::uint64_t p = isqrt64(m);
    if (p > cap) p = cap;
    while (true) {
        if (p * p * static_cast<std::uint64_t>(parts_left) < m) break;
        out[static_cast<std::size_t>(idx)] = p;
        if (four_sq_u64(m - p * p, parts_left - 1, p, out, idx + 1)) return true;
        if (p == 0) break;
        --p;
    }
    return false;
}

bool four_sq_mpz(const mpz_class& m, int parts_left, const mpz_class& cap,
                 std::array<mpz_class, 4>& out, int idx) {
    if (parts_left == 0) return m == 0;
    mpz_class p;
    mpz_sqrt(p.get_mpz_t(), m.get_mpz_t());
    if (p > cap) p = cap;
    while (true) {
        if (p * p * parts_left < m) break;
        out[static_cast<std::size_t>(idx)] = p;
        if (four_sq_mpz(m - p * p, parts_left - 1, p, out, idx + 1)) return true;
        if (p == 0) break;
        --p;
    }
    return false;
}

constexpr std::uint64_t kFourSquaresFastCutoff = 1000000000000000ull;  // 1e15

}  // namespace

FourSquares four_squares(const mpz_class& m) {
    if (m < 0) throw PreconditionViolated("four_squares requires a nonnegative integer");
    FourSquares fs;
    if (m.fits_ulong_p() && m.get_ui() <= kFourSquaresFastCutoff) {
        std::array<std::uint64_t, 4> parts{};
        const std::uint64_t mu = m.get_ui();
        if (!four_sq_u64(mu, 4, isqrt64(mu), parts, 0))
            throw Error("four-square search failed; this contradicts Lagrange's theorem");
        for (std::size_t i = 0; i < 4; ++i)
            fs.parts[i] = mpz_class(static_cast<unsigned long>(parts[i]));
        return fs;
    }
    mpz_class cap;
    mpz_sqrt(cap.get_mpz_t(), m.get_mpz_t());
    if (!four_sq_mpz(m, 4, cap, fs.parts, 0))
        throw Error("four-square search failed; this contradicts Lagrange's theorem");
    return fs;
}

namespace {

// 1 + ceil(max |low coeff| / |lc|): every real root of f lies strictly below
// this (Cauchy bound), so f keeps the sign of its leading coefficient from
// here on.
mpz_class cauchy_root_bound(const IntPoly& f) {
    const int n = f.degree();
    mpz_class maxabs = 0;
    for (int i = 0; i < n; ++i) {
        mpz_class a = abs(f.coeff(static_cast<std::size_t>(i)));
        if (a > maxabs) maxabs = a;
    }
    mpz_class lc = abs(f.leading());
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), maxabs.get_mpz_t(), lc.get_mpz_t());
    return q + 1;
}

}  // namespace

NormalizedPoly normalize_poly(const IntPoly& f, const mpz_class& N0) {
    if (f.degree() < 1)
        throw NotEventuallySigned("normalization requires a nonconstant polynomial");
    if (N0 < 0) throw PreconditionViolated("N0 must be nonnegative");

    NormalizedPoly out;
    out.negated = sgn(f.leading()) < 0;
    IntPoly h = out.negated ? -f : f;

    // Quick certificate: if h(x + N0) has only nonnegative coefficients it is
    // nonnegative on n >= 0 and k = N0 is already minimal-and-valid.
    IntPoly shifted = taylor_shift(h, N0);
    bool all_nonneg = true;
    for (std::size_t i = 0; i < shifted.coeffs().size(); ++i)
        if (shifted.coeff(i) < 0) {
            all_nonneg = false;
            break;
        }
    mpz_class k = N0;
    if (!all_nonneg) {
        // h is positive beyond its root bound; the minimal shift is one past
        // the last integer >= N0 where h is still negative.
        mpz_class bound = cauchy_root_bound(h);
        for (mpz_class j = bound; j >= N0; --j) {
            if (eval(h, j) < 0) {
                k = j + 1;
                break;
            }
        }
    }
    out.poly = taylor_shift(h, k);
    out.shift = k;
    return out;
}

namespace {

struct KamkeSearch {
    const std::vector<mpz_class>& values;  // values[a] = f(a), a in [0, amax]
    unsigned r;
    std::vector<std::size_t> args;
    mpz_class s2 = 0;

    bool dfs(const mpz_class& rem, unsigned used, std::size_t amax) {
        if (used < r) {
            for (std::size_t a = amax; a >= 1; --a) {
                const mpz_class& v = values[a];
                if (v == 0 || v > rem) continue;
                args.push_back(a);
                if (dfs(rem - v, used + 1, a)) return true;
                args.pop_back();
            }
        }
        if (rem <= static_cast<long>(r - used)) {
            s2 = rem;
            return true;
        }
        return false;
    }
};

}  // namespace

std::optional<KamkeRepresentation> kamke_represent(const IntPoly& f, const mpz_class& m,
                                                   unsigned r) {
    if (f.degree() < 1) throw PreconditionViolated("kamke representation requires nonconstant f");
    if (sgn(f.leading()) < 0)
        throw PreconditionViolated("f is eventually negative; normalize first");
    if (m < 0) throw PreconditionViolated("m must be nonnegative");
    if (r == 0) throw PreconditionViolated("budget r must be >= 1");

    // f(a) > m for every a beyond the root bound of f - m, so only a window
    // of arguments matters; tabulate f there once.
    IntPoly fm = f - IntPoly::constant(m);
    mpz_class bound = cauchy_root_bound(fm);
    if (!bound.fits_ulong_p())
        throw PreconditionViolated("argument window too large to search");
    const std::size_t window = static_cast<std::size_t>(bound.get_ui());

    std::vector<mpz_class> values(window + 1);
    std::size_t amax = 0;
    for (std::size_t a = 0; a <= window; ++a) {
        values[a] = eval(f, mpz_class(static_cast<unsigned long>(a)));
        if (values[a] < 0)
            throw PreconditionViolated("f takes a negative value at a = " + std::to_string(a) +
                                       "; normalize first");
        if (a >= 1 && values[a] <= m && values[a] > 0) amax = a;
    }

    KamkeSearch search{values, r, {}, 0};
    if (!search.dfs(m, 0, amax)) return std::nullopt;

    KamkeRepresentation rep;
    rep.terms.reserve(search.args.size());
    for (std::size_t a : search.args) rep.terms.emplace_back(static_cast<unsigned long>(a));
    rep.s2 = search.s2;
    return rep;
}

KamkeScan kamke_scan(const IntPoly& f, unsigned m_max, unsigned r_max, unsigned jobs) {
    if (m_max == 0) throw PreconditionViolated("m_max must be >= 1");
    if (r_max == 0) throw PreconditionViolated("r_max must be >= 1");

    KamkeScan scan;
    scan.m_max = m_max;
    scan.r_max = r_max;
    scan.min_r.assign(m_max, 0);

    detail::parallel_for(m_max, jobs == 0 ? 1 : jobs, [&](std::uint64_t idx) {
        const unsigned m = static_cast<unsigned>(idx) + 1;
        for (unsigned r = 1; r <= r_max; ++r) {
            if (kamke_represent(f, mpz_class(m), r).has_value()) {
                scan.min_r[idx] = r;
                break;
            }
        }
    });

    for (unsigned m = 1; m <= m_max; ++m) {
        const unsigned mr = scan.min_r[m - 1];
        if (mr == 0) {
            scan.gaps.push_back(m);
        } else if (mr > scan.overall_max) {
            scan.overall_max = mr;
            scan.attained_at = m;
        }
    }
    return scan;
}

PhiWReport phi_w_set(const mpz_class& a, const mpz_class& b, unsigned x_max) {
    if (a <= 0) throw PreconditionViolated("a must be a positive integer");
    if (b <= 0) throw PreconditionViolated("b must be a positive integer");
    if (x_max == 0) throw PreconditionViolated("x_max must be >= 1");

    // Membership per the defining formula: ax != 0, ax != b, and both ax and
    // b - ax are four-square sums over W = N (decided by actually producing
    // the decompositions; a negative value has none).
    auto four_square_sum = [](const mpz_class& v) {
        if (v < 0) return false;
        FourSquares fs = four_squares(v);
        mpz_class check = fs.parts[0] * fs.parts[0] + fs.parts[1] * fs.parts[1] +
                          fs.parts[2] * fs.parts[2] + fs.parts[3] * fs.parts[3];
        if (check != v) throw Error("four-square certificate failed to validate");
        return true;
    };

    PhiWReport rep;
    rep.a = a;
    rep.b = b;
    rep.x_max = x_max;
    const long span = static_cast<long>(x_max);
    for (long x = -span; x <= span; ++x) {
        mpz_class ax = a * mpz_class(x);
        if (ax == 0 || ax == b) continue;
        if (!four_square_sum(ax) || !four_square_sum(b - ax)) continue;
        rep.members.emplace_back(x);
    }

    // Independent arithmetic characterization over Z: {x : 0 < ax < b}.
    std::vector<mpz_class> expected;
    for (long x = -span; x <= span; ++x) {
        mpz_class ax = a * mpz_class(x);
        if (ax > 0 && ax < b) expected.emplace_back(x);
    }
    rep.chain_equal = rep.members == expected;
    return rep;
}

}  // namespace trw
