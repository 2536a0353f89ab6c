#include <trw/realroots.hpp>

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "util.hpp"

using trw::IntPoly;

TEST_CASE("sturm chain: frozen shapes") {
    auto sc = trw::sturm_chain(IntPoly{-2, 0, 1});
    REQUIRE(sc.chain.size() == 3);
    CHECK(sc.chain[0] == (IntPoly{-2, 0, 1}));
    CHECK(sc.chain[1] == (IntPoly{0, 1}));
    CHECK(sc.chain[2] == (IntPoly{1}));

    // Repeated roots are flattened: the chain starts from the squarefree part.
    auto sc2 = trw::sturm_chain(IntPoly{1, -2, 1});
    CHECK(sc2.chain[0] == (IntPoly{-1, 1}));

    CHECK_THROWS_AS(trw::sturm_chain(IntPoly::zero()), trw::ZeroPolynomial);
    CHECK_THROWS_AS(trw::sturm_chain(IntPoly{7}), trw::DegreeTooSmall);
}

TEST_CASE("sign at a rational point") {
    IntPoly f{-2, 0, 1};  // x^2 - 2
    CHECK(trw::sign_at(f, mpq_class(3, 2)) == 1);
    CHECK(trw::sign_at(f, mpq_class(1)) == -1);
    CHECK(trw::sign_at(IntPoly{-4, 0, 1}, mpq_class(2)) == 0);
    CHECK(trw::sign_at(IntPoly{0, 1}, mpq_class(-7, 3)) == -1);
    CHECK_THROWS_AS(trw::sign_at(IntPoly::zero(), mpq_class(0)), trw::ZeroPolynomial);
}

TEST_CASE("real root counts: frozen and randomized") {
    CHECK(trw::count_real_roots(IntPoly{1, 0, 1}) == 0);
    CHECK(trw::count_real_roots(IntPoly{0, -1, 0, 1}) == 3);
    CHECK(trw::count_real_roots(IntPoly{1, -2, 1}) == 1);   // (x-1)^2, distinct count
    CHECK(trw::count_real_roots(IntPoly{0, 0, 0, 1}) == 1); // x^3
    CHECK(trw::count_real_roots(IntPoly{6, 0, -5, 0, 1}) == 4);
    CHECK(trw::count_real_roots(testutil::poly_from_roots({1, 2, 3, 4, 5})) == 5);
    CHECK(trw::count_real_roots(IntPoly{-1, -1, 0, 0, 0, 1}) == 1);  // x^5 - x - 1

    testutil::Rng rng(301);
    for (int iter = 0; iter < 40; ++iter) {
        std::set<long> roots;
        int n = static_cast<int>(rng.uniform(1, 6));
        while (static_cast<int>(roots.size()) < n) roots.insert(rng.uniform(-20, 20));
        IntPoly f = testutil::poly_from_roots({roots.begin(), roots.end()});
        CHECK(trw::count_real_roots(f) == static_cast<unsigned>(n));
    }
}

TEST_CASE("interval counts: frozen, additive, endpoint guards") {
    IntPoly f{-2, 0, 1};  // roots +-sqrt(2)
    CHECK(trw::count_real_roots(f, mpq_class(0), mpq_class(2)) == 1);
    CHECK(trw::count_real_roots(f, mpq_class(-2), mpq_class(2)) == 2);
    CHECK(trw::count_real_roots(f, mpq_class(2), mpq_class(3)) == 0);

    // Counts add across a splitting point that is not itself a root.
    testutil::Rng rng(302);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly g = testutil::random_monic_squarefree(rng, static_cast<int>(rng.uniform(2, 5)),
                                                      -8, 8);
        mpq_class lo(-1000), mid(rng.uniform(-5, 5), 2), hi(1000);  // mid has denominator 2
        CHECK(trw::count_real_roots(g, lo, hi) ==
              trw::count_real_roots(g, lo, mid) + trw::count_real_roots(g, mid, hi));
    }

    CHECK_THROWS_AS(trw::count_real_roots(IntPoly{-4, 0, 1}, mpq_class(2), mpq_class(5)),
                    trw::EndpointIsRoot);
    CHECK_THROWS_AS(trw::count_real_roots(IntPoly{-4, 0, 1}, mpq_class(-5), mpq_class(-2)),
                    trw::EndpointIsRoot);
    CHECK_THROWS_AS(trw::count_real_roots(f, mpq_class(1), mpq_class(1)),
                    trw::PreconditionViolated);
    CHECK_THROWS_AS(trw::count_real_roots(f, mpq_class(3), mpq_class(1)),
                    trw::PreconditionViolated);
}

namespace {

IntPoly reflect(const IntPoly& f) {
    // f(-x): negate the odd coefficients.
    std::vector<mpz_class> c;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i)
        c.push_back(i % 2 == 0 ? f.coeff(i) : -f.coeff(i));
    return IntPoly(c);
}

}  // namespace

TEST_CASE("totally-real predicate and invariances") {
    CHECK(trw::is_totally_real(IntPoly{-2, 0, 1}));
    CHECK(trw::is_totally_real(IntPoly{1, -2, 1}));  // double root still counts
    CHECK_FALSE(trw::is_totally_real(IntPoly{1, 0, 1}));
    CHECK_FALSE(trw::is_totally_real(IntPoly{-1, -1, 0, 1}));  // one real, two complex

    testutil::Rng rng(303);
    for (int iter = 0; iter < 30; ++iter) {
        IntPoly f = testutil::random_monic(rng, static_cast<int>(rng.uniform(1, 5)), -6, 6);
        bool tr = trw::is_totally_real(f);
        CHECK(trw::is_totally_real(trw::taylor_shift(f, mpz_class(rng.uniform(-4, 4)))) == tr);
        CHECK(trw::is_totally_real(reflect(f)) == tr);
    }
}

TEST_CASE("root boxing: all_roots_in and filter_box") {
    IntPoly f{-2, 0, 1};
    CHECK(trw::all_roots_in(f, mpq_class(-2), mpq_class(2)));
    CHECK_FALSE(trw::all_roots_in(f, mpq_class(0), mpq_class(2)));
    CHECK(trw::all_roots_in(IntPoly{1, -2, 1}, mpq_class(0), mpq_class(2)));
    CHECK_FALSE(trw::all_roots_in(IntPoly{1, 0, 1}, mpq_class(-9), mpq_class(9)));

    std::vector<IntPoly> polys{IntPoly{-2, 0, 1}, IntPoly{-1, 1}, IntPoly{2, -3, 1},
                               IntPoly{-5, 1}};
    auto kept = trw::filter_box(polys, mpq_class(3));
    REQUIRE(kept.size() == 2);
    CHECK(kept[0] == (IntPoly{-1, 1}));
    CHECK(kept[1] == (IntPoly{2, -3, 1}));
    CHECK(trw::filter_box({}, mpq_class(1)).empty());
}

TEST_CASE("numeric root approximations satisfy their residual contract") {
    auto ar = trw::approx_roots(IntPoly{-2, 0, 1}, 1e-12);
    REQUIRE(ar.roots.size() == 2);
    std::vector<double> re{ar.roots[0].real(), ar.roots[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(std::abs(re[0] + 1.4142135623730951) < 1e-9);
    CHECK(std::abs(re[1] - 1.4142135623730951) < 1e-9);
    CHECK(std::abs(ar.roots[0].imag()) < 1e-9);
    REQUIRE(ar.residuals.size() == 2);
    for (double r : ar.residuals) CHECK(r <= ar.bound);

    // Multiplicities collapse: only distinct roots are reported.
    CHECK(trw::approx_roots(IntPoly{1, -2, 1}, 1e-10).roots.size() == 1);

    // Integer-rooted polynomials recover their roots to high accuracy.
    testutil::Rng rng(304);
    for (int iter = 0; iter < 20; ++iter) {
        std::set<long> roots;
        int n = static_cast<int>(rng.uniform(2, 6));
        while (static_cast<int>(roots.size()) < n) roots.insert(rng.uniform(-10, 10));
        auto got = trw::approx_roots(testutil::poly_from_roots({roots.begin(), roots.end()}),
                                     1e-12);
        REQUIRE(got.roots.size() == roots.size());
        std::vector<double> re2;
        for (const auto& z : got.roots) {
            CHECK(std::abs(z.imag()) < 1e-6);
            re2.push_back(z.real());
        }
        std::sort(re2.begin(), re2.end());
        std::size_t i = 0;
        for (long r : roots) CHECK(std::abs(re2[i++] - static_cast<double>(r)) < 1e-6);
    }
}
