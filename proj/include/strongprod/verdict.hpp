#ifndef STRONGPROD_VERDICT_HPP
#define STRONGPROD_VERDICT_HPP

#include <cstddef>
#include <vector>

#include "budget.hpp"

namespace strongprod {

enum class verdict_state { holds, fails, inconclusive };

inline const char* to_string(verdict_state s)
{
    switch (s) {
    case verdict_state::holds:
        return "true";
    case verdict_state::fails:
        return "false";
    default:
        return "inconclusive";
    }
}

// Outcome of an "all X have the same size" test. When the property holds,
// `witnesses` has one member of the common size; when it fails, two members
// of different sizes; when inconclusive, whatever was seen before the budget
// ran out (possibly nothing).
template <class Item>
struct property_verdict {
    verdict_state state = verdict_state::inconclusive;
    std::vector<Item> witnesses;
    int common_size = -1;

    bool holds() const { return state == verdict_state::holds; }
    bool fails() const { return state == verdict_state::fails; }
    bool inconclusive() const { return state == verdict_state::inconclusive; }
};

// Collected output of an enumeration. `status` tells whether the list is
// complete.
template <class Item>
struct enumeration {
    std::vector<Item> items;
    enum_status status = enum_status::complete;

    bool truncated() const { return exhausted_budget(status); }
};

struct enumeration_options {
    bool early_exit_two_sizes = false;
    budget limits;
};

template <class Item>
int item_size(const Item& x)
{
    return static_cast<int>(x.size());
}

// Shared driver for collect-with-options wrappers.
template <class Item, class ForEach>
enumeration<Item> collect(ForEach&& for_each, const enumeration_options& opt)
{
    enumeration<Item> out;
    int first_size = -1;
    out.status = for_each(
        [&](const Item& x) {
            out.items.push_back(x);
            const int s = item_size(x);
            if (first_size < 0)
                first_size = s;
            return !(opt.early_exit_two_sizes && s != first_size);
        },
        opt.limits);
    return out;
}

} // namespace strongprod

#endif // STRONGPROD_VERDICT_HPP
