#ifndef TRW_SRC_BAREISS_HPP
#define TRW_SRC_BAREISS_HPP

#include <cstddef>
#include <utility>
#include <vector>

namespace trw::detail {

// Fraction-free determinant over an integral domain (Bareiss one-step
// elimination). Every division is by the previous pivot and is exact in the
// ring, so no fractions ever appear. Ops must provide:
//   static bool is_zero(const Ring&)
//   static Ring exact_div(const Ring&, const Ring&)
// `one` is the multiplicative identity of the ring; rings that carry shape
// (a parameter list, say) get their zero built from it.
template <class Ring, class Ops>
Ring bareiss_determinant(std::vector<std::vector<Ring>> m, const Ring& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    Ring prev = one;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Ops::is_zero(m[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && Ops::is_zero(m[swap_row][k])) ++swap_row;
            if (swap_row == n) return one - one;  // singular: a zero column survived
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Ring t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = Ops::exact_div(t, prev);
            }
        }
        prev = m[k][k];
    }
    Ring det = std::move(m[n - 1][n - 1]);
    return negate ? -det : det;
}

}

#endif
