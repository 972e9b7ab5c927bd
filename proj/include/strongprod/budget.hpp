#ifndef STRONGPROD_BUDGET_HPP
#define STRONGPROD_BUDGET_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>

namespace strongprod {

// Limits for an exhaustive search. Both are optional; an empty budget means
// "run to completion".
struct budget {
    std::optional<std::size_t> max_results;
    std::optional<std::chrono::milliseconds> time_limit;

    static budget unlimited() { return {}; }
    static budget results(std::size_t n) { return {n, std::nullopt}; }
    static budget millis(std::int64_t ms) { return {std::nullopt, std::chrono::milliseconds(ms)}; }
};

enum class enum_status {
    complete,  // search space exhausted
    stopped,   // the visitor asked to stop
    truncated, // max_results reached
    timed_out,
};

inline bool exhausted_budget(enum_status s)
{
    return s == enum_status::truncated || s == enum_status::timed_out;
}

// Per-search bookkeeping. The clock is read once every 4096 ticks.
class budget_tracker {
public:
    explicit budget_tracker(const budget& b) : budget_(b)
    {
        if (b.time_limit)
            deadline_ = std::chrono::steady_clock::now() + *b.time_limit;
    }

    // Call once per search node; false once the deadline has passed.
    bool tick()
    {
        if (!deadline_)
            return true;
        if ((++ticks_ & 4095u) == 0 && std::chrono::steady_clock::now() >= *deadline_)
            expired_ = true;
        return !expired_;
    }

    // Call before reporting a result; false means the cap is already full and
    // the result must not be delivered.
    bool admit_result()
    {
        if (budget_.max_results && results_ >= *budget_.max_results)
            return false;
        ++results_;
        return true;
    }

    bool expired() const { return expired_; }
    std::size_t results() const { return results_; }

private:
    budget budget_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t ticks_ = 0;
    std::size_t results_ = 0;
    bool expired_ = false;
};

} // namespace strongprod

#endif // STRONGPROD_BUDGET_HPP
