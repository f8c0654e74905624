#ifndef COEX_PARALLEL_HPP
#define COEX_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace coex {

// Runs fn(0..n-1) across hardware threads. Callers write results into
// per-index slots, so output order never depends on scheduling. The first
// exception wins and is rethrown after all workers drain.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    size_t workers = std::min<size_t>(hw ? hw : 1, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= n || failed.load())
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!failed.exchange(true))
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back(work);
    for (std::thread& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace coex

#endif
