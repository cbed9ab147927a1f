#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cdiag {

// Worker count for frontier expansion; 1 by default.  Results never depend
// on this setting, only wall time does.
int worker_threads();
void set_worker_threads(int t);

// Splits [0, count) into one contiguous range per worker and runs
// body(begin, end) on each.  Exceptions are rethrown in range order.
template <class F>
void parallel_ranges(std::size_t count, F body) {
    int workers = worker_threads();
    if (workers <= 1 || count < 2) {
        body(std::size_t{0}, count);
        return;
    }
    std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (int t = 0; t < workers; ++t) {
        std::size_t begin = chunk * t;
        std::size_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        threads.emplace_back([&, t, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : threads) th.join();
    for (std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace cdiag
