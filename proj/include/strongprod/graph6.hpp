#ifndef STRONGPROD_GRAPH6_HPP
#define STRONGPROD_GRAPH6_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace strongprod {

// graph6 with the single-byte order header, i.e. 1 <= n <= 62. Adjacency bits
// x(i,j), i < j, are written column by column: (0,1), (0,2), (1,2), (0,3), ...
// packed big-endian into 6-bit groups, each offset by 63, zero padded.
inline constexpr int graph6_max_order = 62;

inline graph from_graph6(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (text.substr(0, header.size()) == header)
        base = header.size();
    std::string_view body = text.substr(base);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r'))
        body.remove_suffix(1);

    if (body.empty())
        throw parse_error("graph6: empty input", base);
    const int h = static_cast<unsigned char>(body[0]);
    if (h == 126)
        throw parse_error("graph6: orders above 62 are not supported", base);
    if (h < 63 || h > 126)
        throw parse_error("graph6: invalid order byte", base);
    const int n = h - 63;
    if (n < 1)
        throw parse_error("graph6: order must be at least 1", base);

    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t expected = 1 + (bits + 5) / 6;
    if (body.size() != expected)
        throw parse_error("graph6: expected " + std::to_string(expected) + " bytes, found "
                              + std::to_string(body.size()),
                          base + std::min(body.size(), expected));

    std::vector<edge> edges;
    std::size_t k = 0;
    for (std::size_t i = 1; i < body.size(); ++i) {
        int c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126)
            throw parse_error("graph6: byte outside 63..126", base + i);
        c -= 63;
        for (int b = 5; b >= 0; --b, ++k) {
            const bool set = (c >> b) & 1;
            if (k >= bits) {
                if (set)
                    throw parse_error("graph6: nonzero padding bit", base + i);
                continue;
            }
            if (set) {
                // column j holds bits for i = 0..j-1; locate (row, col) of bit k
                int col = 1;
                std::size_t start = 0;
                while (start + static_cast<std::size_t>(col) <= k) {
                    start += static_cast<std::size_t>(col);
                    ++col;
                }
                edges.emplace_back(static_cast<int>(k - start), col);
            }
        }
    }
    return graph(n, edges);
}

template <std::size_t W>
std::string to_graph6(const basic_graph<W>& g)
{
    const int n = g.order();
    if (n > graph6_max_order)
        throw capacity_error("graph6 export supports at most 62 vertices, got " + std::to_string(n));
    if (n < 1)
        throw capacity_error("graph6 export needs at least one vertex");
    std::string out(1, static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

} // namespace strongprod

#endif // STRONGPROD_GRAPH6_HPP
