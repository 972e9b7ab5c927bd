#ifndef STRONGPROD_CATALOG_HPP
#define STRONGPROD_CATALOG_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace strongprod {

// Named graphs with frozen vertex orders:
//   complete K_n        0..n-1
//   complete_bipartite  parts {0..m-1} and {m..m+n-1}
//   path P_n            0-1-...-(n-1)
//   cycle C_n           0-1-...-(n-1)-0
//   star K_{1,n}        centre 0, leaves 1..n
//   bull                path 0-1-2-3-4 plus 1-3
//   c6_two_chords       cycle 0..5 plus chords 0-2 and 3-5
namespace named {

inline graph complete(int n)
{
    if (n < 1)
        throw domain_error("K_n needs n >= 1");
    std::vector<edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.emplace_back(i, j);
    return graph(n, es);
}

inline graph complete_bipartite(int m, int n)
{
    if (m < 1 || n < 1)
        throw domain_error("K_{m,n} needs m, n >= 1");
    std::vector<edge> es;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            es.emplace_back(i, m + j);
    return graph(m + n, es);
}

inline graph path(int n)
{
    if (n < 1)
        throw domain_error("P_n needs n >= 1");
    std::vector<edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return graph(n, es);
}

inline graph cycle(int n)
{
    if (n < 3)
        throw domain_error("C_n needs n >= 3");
    std::vector<edge> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return graph(n, es);
}

inline graph star(int n) { return complete_bipartite(1, n); }

inline graph bull() { return graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}}); }

inline graph c6_two_chords()
{
    return graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {3, 5}});
}

inline graph empty(int n) { return graph(n, {}); }

} // namespace named

namespace detail {

inline int parse_int(std::string_view s)
{
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw domain_error("invalid integer parameter '" + std::string(s) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, std::string_view seps)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || seps.find(s[i]) != std::string_view::npos) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

} // namespace detail

// Catalog lookup by id plus integer parameters. Ids: complete, complete-bipartite,
// path, cycle, star, bull, c6-two-chords, empty.
inline graph named_graph(std::string_view id, const std::vector<int>& params)
{
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw domain_error("named graph '" + std::string(id) + "' takes " + std::to_string(k)
                               + " parameter(s)");
    };
    if (id == "complete" || id == "K") {
        want(1);
        return named::complete(params[0]);
    }
    if (id == "complete-bipartite") {
        want(2);
        return named::complete_bipartite(params[0], params[1]);
    }
    if (id == "path" || id == "P") {
        want(1);
        return named::path(params[0]);
    }
    if (id == "cycle" || id == "C") {
        want(1);
        return named::cycle(params[0]);
    }
    if (id == "star") {
        want(1);
        return named::star(params[0]);
    }
    if (id == "empty") {
        want(1);
        return named::empty(params[0]);
    }
    if (id == "bull") {
        want(0);
        return named::bull();
    }
    if (id == "c6-two-chords") {
        want(0);
        return named::c6_two_chords();
    }
    throw domain_error("unknown named graph '" + std::string(id) + "'");
}

// Shorthand used on the command line, with or without a "named:" prefix:
//   K4, P5, C6, K2,3 (or K2_3), star3, bull, c6-two-chords,
//   complete:4, complete-bipartite:2:3, path:5, cycle:6, star:3, empty:2
inline graph parse_named(std::string_view text)
{
    if (text.substr(0, 6) == "named:")
        text.remove_prefix(6);
    auto parts = detail::split(text, ":");
    if (parts.size() > 1) {
        std::vector<int> params;
        for (std::size_t i = 1; i < parts.size(); ++i)
            params.push_back(detail::parse_int(parts[i]));
        return named_graph(parts[0], params);
    }
    if (text == "bull" || text == "c6-two-chords")
        return named_graph(text, {});
    if (text.substr(0, 4) == "star")
        return named::star(detail::parse_int(text.substr(4)));
    if (text.size() >= 2 && (text[0] == 'K' || text[0] == 'P' || text[0] == 'C')) {
        auto nums = detail::split(text.substr(1), ",_");
        if (text[0] == 'K' && nums.size() == 2)
            return named::complete_bipartite(detail::parse_int(nums[0]), detail::parse_int(nums[1]));
        if (nums.size() == 1)
            return named_graph(std::string_view(text.data(), 1), {detail::parse_int(nums[0])});
    }
    throw domain_error("unknown named graph '" + std::string(text) + "'");
}

} // namespace strongprod

#endif // STRONGPROD_CATALOG_HPP
