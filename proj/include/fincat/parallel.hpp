#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace fincat {

// Runs tasks[i] for i = 0..n-1 on up to `threads` workers and stores each
// result at its own index, so the merged output is identical to a sequential
// run regardless of scheduling.
template <typename R>
std::vector<R> parallel_map(size_t n, unsigned threads, const std::function<R(size_t)>& task) {
    std::vector<R> results(n);
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) results[i] = task(i);
        return results;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) results[i] = task(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

inline unsigned max_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 4;
}

}  // namespace fincat
