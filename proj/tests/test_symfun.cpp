#include <trw/families.hpp>
#include <trw/symfun.hpp>

#include "doctest.h"
#include "util.hpp"

using trw::IntPoly;

TEST_CASE("power sums: frozen sequences") {
    // x^2 - 2x - 1: roots 1 +/- sqrt(2).
    auto ps = trw::power_sums_from_coeffs(IntPoly{-1, -2, 1}, 3);
    CHECK(ps.n == 2);
    REQUIRE(ps.values.size() == 3);
    CHECK(ps.values[0] == 2);
    CHECK(ps.values[1] == 6);
    CHECK(ps.values[2] == 14);

    // x^2 - 3x + 1: roots (3 +/- sqrt(5))/2.
    auto ps2 = trw::power_sums_from_coeffs(IntPoly{1, -3, 1}, 4);
    REQUIRE(ps2.values.size() == 4);
    CHECK(ps2.values[0] == 3);
    CHECK(ps2.values[1] == 7);
    CHECK(ps2.values[2] == 18);
    CHECK(ps2.values[3] == 47);

    // x - 1: the single root 1.
    auto ps3 = trw::power_sums_from_coeffs(IntPoly{-1, 1}, 5);
    for (const auto& v : ps3.values) CHECK(v == 1);

    // x^3 - x - 1 (the plastic-number cubic).
    auto ps4 = trw::power_sums_from_coeffs(IntPoly{-1, -1, 0, 1}, 4);
    CHECK(ps4.values == std::vector<mpz_class>{0, 2, 3, 2});

    CHECK_THROWS_AS(trw::power_sums_from_coeffs(IntPoly::zero(), 2), trw::ZeroPolynomial);
    CHECK_THROWS_AS(trw::power_sums_from_coeffs(IntPoly{1, 0, 2}, 2), trw::NotMonic);
    CHECK_THROWS_AS(trw::power_sums_from_coeffs(IntPoly{5}, 2), trw::NotMonic);
    CHECK_THROWS_AS(trw::power_sums_from_coeffs(IntPoly{1}, 2), trw::DegreeTooSmall);
}

TEST_CASE("power sums agree with the companion-matrix trace") {
    testutil::Rng rng(201);
    for (int iter = 0; iter < 60; ++iter) {
        IntPoly f = testutil::random_monic(rng, static_cast<int>(rng.uniform(1, 6)), -10, 10);
        auto ps = trw::power_sums_from_coeffs(f, 12);
        for (unsigned m = 1; m <= 12; ++m) CHECK(ps.values[m - 1] == trw::trace_power(f, m));
    }
}

TEST_CASE("elementary symmetric functions: recovery and failure") {
    trw::PowerSums q;
    q.n = 2;
    q.values = {2, 6};
    auto e = trw::elem_from_power_sums(q, 2);
    REQUIRE(e.values.size() == 2);
    CHECK(e.values[0] == 2);
    CHECK(e.values[1] == -1);  // recovers x^2 - 2x - 1 via a_{n-k} = (-1)^k e_k

    trw::PowerSums bad;
    bad.n = 2;
    bad.values = {1, 2};  // q_2 = 2 with q_1 = 1 cannot come from integer roots
    CHECK_THROWS_AS(trw::elem_from_power_sums(bad, 2), trw::NonIntegralDivision);

    trw::PowerSums shortq;
    shortq.n = 3;
    shortq.values = {1, 1};
    CHECK_THROWS_AS(trw::elem_from_power_sums(shortq, 3), trw::PreconditionViolated);
}

TEST_CASE("Newton roundtrip recovers coefficients exactly") {
    testutil::Rng rng(202);
    for (int iter = 0; iter < 60; ++iter) {
        int n = static_cast<int>(rng.uniform(1, 8));
        IntPoly f = testutil::random_monic(rng, n, -10, 10);
        auto ps = trw::power_sums_from_coeffs(f, static_cast<unsigned>(n));
        auto e = trw::elem_from_power_sums(ps, static_cast<unsigned>(n));
        for (int k = 1; k <= n; ++k) {
            mpz_class expect = e.values[static_cast<std::size_t>(k) - 1];
            if (k % 2 != 0) expect = -expect;
            CHECK(f.coeff(static_cast<std::size_t>(n - k)) == expect);
        }
    }
}

TEST_CASE("root power transform: frozen examples") {
    CHECK(trw::root_power_transform(IntPoly{1, -3, 1}, 2) == (IntPoly{1, -7, 1}));
    CHECK(trw::root_power_transform(IntPoly{-1, -2, 1}, 2) == (IntPoly{1, -6, 1}));
    // Roots 2 and 3 -> roots 8 and 27.
    CHECK(trw::root_power_transform(testutil::poly_from_roots({2, 3}), 3) ==
          testutil::poly_from_roots({8, 27}));
    CHECK_THROWS_AS(trw::root_power_transform(IntPoly{-1, -2, 1}, 0),
                    trw::PreconditionViolated);
    CHECK_THROWS_AS(trw::root_power_transform(IntPoly{1, 0, 3}, 2), trw::NotMonic);
}

TEST_CASE("transform laws: trace identity, identity at N=1, composition") {
    testutil::Rng rng(203);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly f = testutil::random_monic(rng, static_cast<int>(rng.uniform(1, 6)), -10, 10);

        CHECK(trw::root_power_transform(f, 1) == f);

        for (unsigned N = 2; N <= 4; ++N) {
            IntPoly g = trw::root_power_transform(f, N);
            auto qhat = trw::power_sums_from_coeffs(g, 8);
            auto q = trw::power_sums_from_coeffs(f, 8 * N);
            for (unsigned k = 1; k <= 8; ++k) CHECK(qhat.values[k - 1] == q.values[k * N - 1]);
        }

        for (unsigned M = 2; M <= 3; ++M)
            for (unsigned N = 2; N <= 3; ++N)
                CHECK(trw::root_power_transform(trw::root_power_transform(f, M), N) ==
                      trw::root_power_transform(f, M * N));
    }
}

TEST_CASE("parametric power sums instantiate consistently") {
    for (const auto& fam : trw::registry()) {
        trw::MultiParamPoly q0 = trw::q_m_param(fam.poly, 0);
        CHECK(q0.is_constant());
        CHECK(q0.constant_value() == fam.degree);

        const mpz_class& lo = fam.default_ranges[0].lo;
        const mpz_class& hi = fam.default_ranges[0].hi;
        const std::vector<mpz_class> samples{lo, mpz_class((lo + hi) / 2), hi};
        for (const mpz_class& v : samples) {
            std::map<std::string, mpz_class> asg{{fam.params[0], v}};
            IntPoly f = fam.poly.instantiate(asg);
            auto ps = trw::power_sums_from_coeffs(f, 6);
            for (unsigned m = 1; m <= 6; ++m)
                CHECK(trw::q_m_param(fam.poly, m).instantiate(asg) == ps.values[m - 1]);
        }
    }
}
