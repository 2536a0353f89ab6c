#include <benchmark/benchmark.h>

#include <vector>

#include <trw/families.hpp>
#include <trw/intpoly.hpp>
#include <trw/realroots.hpp>
#include <trw/symfun.hpp>
#include <trw/waring.hpp>

namespace {

// Deterministic dense polynomial with small mixed-sign coefficients.
trw::IntPoly dense_poly(int degree, long salt) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
        long v = ((i + salt) * (i + 2 * salt + 3)) % 19 - 9;
        c[static_cast<std::size_t>(i)] = v == 0 ? 1 : v;
    }
    return trw::IntPoly(std::move(c));
}

trw::IntPoly dense_monic(int degree, long salt) {
    trw::IntPoly f = dense_poly(degree - 1, salt);
    return f + trw::IntPoly::monomial(1, static_cast<std::size_t>(degree));
}

// Product of x - r over r = -k..k, all roots real and distinct.
trw::IntPoly linear_product(int k) {
    trw::IntPoly f{1};
    for (int r = -k; r <= k; ++r) f = f * trw::IntPoly{-r, 1};
    return f;
}

void BM_PolyMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    trw::IntPoly f = dense_poly(n, 1);
    trw::IntPoly g = dense_poly(n, 5);
    for (auto _ : state) {
        trw::IntPoly h = f * g;
        benchmark::DoNotOptimize(h);
    }
}
BENCHMARK(BM_PolyMul)->Arg(16)->Arg(64)->Arg(256);

void BM_Resultant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    trw::IntPoly f = dense_poly(n, 1);
    trw::IntPoly g = dense_poly(n, 7);
    for (auto _ : state) {
        mpz_class r = trw::resultant(f, g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Resultant)->Arg(8)->Arg(16)->Arg(32);

void BM_CountRealRoots(benchmark::State& state) {
    trw::IntPoly f = linear_product(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        unsigned n = trw::count_real_roots(f);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_CountRealRoots)->Arg(3)->Arg(5)->Arg(7);

void BM_PowerSums(benchmark::State& state) {
    trw::IntPoly f = dense_monic(8, 3);
    const unsigned M = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        auto ps = trw::power_sums_from_coeffs(f, M);
        benchmark::DoNotOptimize(ps);
    }
}
BENCHMARK(BM_PowerSums)->Arg(32)->Arg(128);

void BM_TracePower(benchmark::State& state) {
    trw::IntPoly f = dense_monic(8, 3);
    const unsigned long m = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        mpz_class t = trw::trace_power(f, m);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_TracePower)->Arg(64)->Arg(1024);

void BM_FourSquares(benchmark::State& state) {
    mpz_class m(1);
    for (int i = 0; i < state.range(0); ++i) m *= 10;
    m += 3;
    for (auto _ : state) {
        auto fs = trw::four_squares(m);
        benchmark::DoNotOptimize(fs);
    }
}
BENCHMARK(BM_FourSquares)->Arg(6)->Arg(12);

void BM_KamkeRepresent(benchmark::State& state) {
    trw::IntPoly cube{0, 0, 0, 1};
    const long m = state.range(0);
    for (auto _ : state) {
        auto rep = trw::kamke_represent(cube, m, 9);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_KamkeRepresent)->Arg(23)->Arg(300);

void BM_VerifyInstance(benchmark::State& state) {
    const auto& fam = trw::registry()[static_cast<std::size_t>(state.range(0))];
    std::map<std::string, mpz_class> asg{{fam.params[0], fam.default_ranges[0].hi}};
    for (auto _ : state) {
        auto res = trw::verify_instance(fam, asg);
        benchmark::DoNotOptimize(res);
    }
}
BENCHMARK(BM_VerifyInstance)->Arg(1)->Arg(5);  // cubic and sextic families

}  // namespace

BENCHMARK_MAIN();
