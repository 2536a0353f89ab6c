#ifndef TRW_SRC_PARALLEL_HPP
#define TRW_SRC_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace trw::detail {

// Runs body(i) for i in [0, count) on up to `jobs` threads.  Index i is
// always handled by worker i % J (strided assignment), so a body that writes
// only to slot i — or to a per-worker bucket keyed by i % J — needs no
// locking and produces the same result for every jobs value.
template <class F>
void parallel_for(std::uint64_t count, unsigned jobs, F&& body) {
    if (count == 0) return;
    std::uint64_t workers64 = jobs == 0 ? 1 : jobs;
    if (workers64 > count) workers64 = count;
    const unsigned J = static_cast<unsigned>(workers64);
    if (J <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(J);
    for (unsigned w = 0; w < J; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::uint64_t i = w; i < count; i += J) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace trw::detail

#endif
