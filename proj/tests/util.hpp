#ifndef TRW_TESTS_UTIL_HPP
#define TRW_TESTS_UTIL_HPP

// Deterministic randomness for property tests.  SplitMix64 with fixed seeds:
// the sequence is identical on every platform and every run, so failures are
// reproducible and golden expectations stay stable.

#include <cstdint>
#include <vector>

#include <trw/intpoly.hpp>

namespace testutil {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Inclusive on both ends.
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline trw::IntPoly random_monic(Rng& rng, int degree, long lo, long hi) {
    std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = rng.uniform(lo, hi);
    c[static_cast<std::size_t>(degree)] = 1;
    return trw::IntPoly(std::move(c));
}

inline trw::IntPoly random_monic_squarefree(Rng& rng, int degree, long lo, long hi) {
    for (;;) {
        trw::IntPoly f = random_monic(rng, degree, lo, hi);
        if (trw::squarefree_part(f) == f) return f;
    }
}

// Product of (x - r) over the given integer roots.
inline trw::IntPoly poly_from_roots(const std::vector<long>& roots) {
    trw::IntPoly f{1};
    for (long r : roots) f = f * trw::IntPoly{-r, 1};
    return f;
}

}  // namespace testutil

#endif
