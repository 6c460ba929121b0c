#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pmet {

/// Calls fn(i) for i in [0, count) on up to `workers` threads. Each call must
/// write only its own output slot; callers reduce afterwards in index order, so
/// results do not depend on the worker count. If several calls throw, the
/// exception from the lowest index is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn)
{
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const std::size_t n_threads = std::min<std::size_t>(workers, count);
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back(body);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

/// Worker count used when the caller asks for "all": hardware concurrency, at least 1.
inline unsigned max_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
}

}  // namespace pmet
