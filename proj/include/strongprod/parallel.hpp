#ifndef STRONGPROD_PARALLEL_HPP
#define STRONGPROD_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace strongprod {

// STRONGPROD_JOBS if set to a positive integer, else 1.
inline int default_jobs()
{
    if (const char* s = std::getenv("STRONGPROD_JOBS")) {
        try {
            const int j = std::stoi(s);
            if (j > 0)
                return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// out[i] = f(i) for i < count, evaluated on up to `jobs` threads. Results are
// stored by index, so the output never depends on scheduling. The first
// exception (by index) is rethrown after all workers finish.
template <class F>
auto parallel_map(std::size_t count, int jobs, F&& f) -> std::vector<decltype(f(std::size_t{}))>
{
    using R = decltype(f(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }
    std::vector<R> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

} // namespace strongprod

#endif // STRONGPROD_PARALLEL_HPP
