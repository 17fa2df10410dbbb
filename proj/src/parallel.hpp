#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hypermetric::detail {

/// Hardware concurrency, capped by HYPERMETRIC_THREADS when set to a positive integer.
inline std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPERMETRIC_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap > 0) {
                n = std::min(n, static_cast<std::size_t>(cap));
            }
        } catch (const std::exception&) {
        }
    }
    return n;
}

/// Runs fn(i) for i in [0, count) over contiguous chunks; rethrows the first exception.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace hypermetric::detail
