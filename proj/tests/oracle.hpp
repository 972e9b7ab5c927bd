#ifndef STRONGPROD_TESTS_ORACLE_HPP
#define STRONGPROD_TESTS_ORACLE_HPP

// Brute-force reference implementations. They share nothing with the library
// beyond reading a graph's edge list: plain adjacency matrices, subsets as
// integer masks, exhaustive search.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <strongprod/graph.hpp>

namespace oracle {

using mask = std::uint64_t;

struct adjacency {
    int n = 0;
    std::vector<std::vector<bool>> a;
    std::vector<std::pair<int, int>> edges; // u < v, lexicographic

    explicit adjacency(int order = 0) : n(order), a(order, std::vector<bool>(order, false)) {}

    void add(int u, int v)
    {
        a[u][v] = a[v][u] = true;
    }
    void finish()
    {
        edges.clear();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (a[u][v])
                    edges.emplace_back(u, v);
    }
};

template <std::size_t W>
adjacency of(const strongprod::basic_graph<W>& g)
{
    adjacency r(g.order());
    for (const auto& e : g.edges())
        r.add(e.u, e.v);
    r.finish();
    return r;
}

inline strongprod::graph to_graph(const adjacency& x)
{
    std::vector<strongprod::edge> es;
    for (auto [u, v] : x.edges)
        es.emplace_back(u, v);
    return strongprod::graph(x.n, es);
}

template <std::size_t W>
mask mask_of(const strongprod::bit_set<W>& s)
{
    mask m = 0;
    for (int v : s)
        m |= mask{1} << v;
    return m;
}

inline int popcount(mask m) { return __builtin_popcountll(m); }

inline mask closed(const adjacency& x, int v)
{
    mask m = mask{1} << v;
    for (int w = 0; w < x.n; ++w)
        if (x.a[v][w])
            m |= mask{1} << w;
    return m;
}

inline bool dominates(const adjacency& x, mask d)
{
    mask seen = 0;
    for (int v = 0; v < x.n; ++v)
        if (d >> v & 1)
            seen |= closed(x, v);
    return seen == (x.n == 64 ? ~mask{0} : (mask{1} << x.n) - 1);
}

inline bool independent(const adjacency& x, mask s)
{
    for (int u = 0; u < x.n; ++u)
        for (int v = u + 1; v < x.n; ++v)
            if ((s >> u & 1) && (s >> v & 1) && x.a[u][v])
                return false;
    return true;
}

// Sorted by mask value.
inline std::vector<mask> minimal_dominating_sets(const adjacency& x)
{
    std::vector<mask> out;
    for (mask d = 0; d < (mask{1} << x.n); ++d) {
        if (!dominates(x, d))
            continue;
        bool minimal = true;
        for (int v = 0; v < x.n && minimal; ++v)
            if ((d >> v & 1) && dominates(x, d & ~(mask{1} << v)))
                minimal = false;
        if (minimal)
            out.push_back(d);
    }
    return out;
}

inline std::vector<mask> maximal_independent_sets(const adjacency& x)
{
    std::vector<mask> out;
    for (mask s = 0; s < (mask{1} << x.n); ++s) {
        if (!independent(x, s))
            continue;
        bool maximal = true;
        for (int v = 0; v < x.n && maximal; ++v)
            if (!(s >> v & 1) && independent(x, s | mask{1} << v))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

inline std::set<int> sizes(const std::vector<mask>& sets)
{
    std::set<int> out;
    for (mask m : sets)
        out.insert(popcount(m));
    return out;
}

inline int domination_number(const adjacency& x)
{
    int best = x.n;
    for (mask d = 0; d < (mask{1} << x.n); ++d)
        if (popcount(d) < best && dominates(x, d))
            best = popcount(d);
    return best;
}

inline int independence_number(const adjacency& x)
{
    int best = 0;
    for (mask s = 0; s < (mask{1} << x.n); ++s)
        if (popcount(s) > best && independent(x, s))
            best = popcount(s);
    return best;
}

// Edge subsets are masks over x.edges (at most ~22 edges in practice).
inline mask edge_endpoints(const adjacency& x, mask f)
{
    mask m = 0;
    for (std::size_t i = 0; i < x.edges.size(); ++i)
        if (f >> i & 1)
            m |= (mask{1} << x.edges[i].first) | (mask{1} << x.edges[i].second);
    return m;
}

inline bool is_matching(const adjacency& x, mask f)
{
    return popcount(edge_endpoints(x, f)) == 2 * popcount(f);
}

inline bool edge_dominates(const adjacency& x, mask f)
{
    const mask touched = edge_endpoints(x, f);
    for (auto [u, v] : x.edges)
        if (!(touched >> u & 1) && !(touched >> v & 1))
            return false;
    return true;
}

inline std::vector<mask> maximal_matchings(const adjacency& x)
{
    std::vector<mask> out;
    const std::size_t m = x.edges.size();
    for (mask f = 0; f < (mask{1} << m); ++f) {
        if (!is_matching(x, f))
            continue;
        bool maximal = true;
        for (std::size_t i = 0; i < m && maximal; ++i)
            if (!(f >> i & 1) && is_matching(x, f | mask{1} << i))
                maximal = false;
        if (maximal)
            out.push_back(f);
    }
    return out;
}

inline std::vector<mask> minimal_edge_dominating_sets(const adjacency& x)
{
    std::vector<mask> out;
    const std::size_t m = x.edges.size();
    for (mask f = 0; f < (mask{1} << m); ++f) {
        if (!edge_dominates(x, f))
            continue;
        bool minimal = true;
        for (std::size_t i = 0; i < m && minimal; ++i)
            if ((f >> i & 1) && edge_dominates(x, f & ~(mask{1} << i)))
                minimal = false;
        if (minimal)
            out.push_back(f);
    }
    return out;
}

// Every matching by recursion on the lowest unmatched vertex; fine for
// n <= 12 or so regardless of edge count. visit(vertex mask of V(M), size).
template <class F>
void all_matchings(const adjacency& x, F&& visit)
{
    // `decided`: vertices matched or left out so far; `covered`: V(M)
    auto rec = [&](auto&& self, int v, mask decided, mask covered, int size) -> void {
        while (v < x.n && (decided >> v & 1))
            ++v;
        if (v >= x.n) {
            visit(covered, size);
            return;
        }
        self(self, v + 1, decided | mask{1} << v, covered, size);
        for (int w = v + 1; w < x.n; ++w)
            if (x.a[v][w] && !(decided >> w & 1))
                self(self, v + 1, decided | mask{1} << v | mask{1} << w, covered | mask{1} << v | mask{1} << w,
                     size + 1);
    };
    rec(rec, 0, 0, 0, 0);
}

inline int matching_number(const adjacency& x)
{
    int best = 0;
    all_matchings(x, [&](mask, int s) { best = std::max(best, s); });
    return best;
}

// Vertices left exposed by at least one maximum matching.
inline mask exposed_by_some_maximum_matching(const adjacency& x)
{
    const int nu = matching_number(x);
    const mask all = (mask{1} << x.n) - 1;
    mask out = 0;
    all_matchings(x, [&](mask covered, int s) {
        if (s == nu)
            out |= all & ~covered;
    });
    return out;
}

// Sizes of maximal matchings: a matching is maximal iff the vertices it
// leaves uncovered are independent.
inline std::set<int> maximal_matching_sizes(const adjacency& x)
{
    std::set<int> out;
    const mask all = (mask{1} << x.n) - 1;
    all_matchings(x, [&](mask covered, int s) {
        if (independent(x, all & ~covered))
            out.insert(s);
    });
    return out;
}

// (u1,v1) ~ (u2,v2) iff distinct, u1 = u2 or u1 ~ u2, and v1 = v2 or v1 ~ v2.
inline adjacency strong_product(const adjacency& g, const adjacency& h)
{
    adjacency p(g.n * h.n);
    for (int u1 = 0; u1 < g.n; ++u1)
        for (int v1 = 0; v1 < h.n; ++v1)
            for (int u2 = 0; u2 < g.n; ++u2)
                for (int v2 = 0; v2 < h.n; ++v2) {
                    if (u1 == u2 && v1 == v2)
                        continue;
                    const bool gu = u1 == u2 || g.a[u1][u2];
                    const bool hv = v1 == v2 || h.a[v1][v2];
                    if (gu && hv)
                        p.a[u1 * h.n + v1][u2 * h.n + v2] = true;
                }
    p.finish();
    return p;
}

inline adjacency line_graph(const adjacency& x)
{
    adjacency l(static_cast<int>(x.edges.size()));
    for (std::size_t i = 0; i < x.edges.size(); ++i)
        for (std::size_t j = i + 1; j < x.edges.size(); ++j) {
            auto [a, b] = x.edges[i];
            auto [c, d] = x.edges[j];
            if (a == c || a == d || b == c || b == d)
                l.add(static_cast<int>(i), static_cast<int>(j));
        }
    l.finish();
    return l;
}

// graph6 for n <= 62: N(n) = n + 63, then the upper triangle column by
// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) in 6-bit groups, zero padded.
inline std::string graph6(const adjacency& x)
{
    std::string s(1, static_cast<char>(x.n + 63));
    std::vector<int> bits;
    for (int j = 1; j < x.n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back(x.a[i][j] ? 1 : 0);
    while (bits.size() % 6)
        bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b)
            v = v * 2 + bits[k + b];
        s.push_back(static_cast<char>(v + 63));
    }
    return s;
}

inline bool connected_within(const adjacency& x, mask within)
{
    if (within == 0)
        return true;
    const int start = __builtin_ctzll(within);
    mask seen = mask{1} << start, frontier = seen;
    while (frontier) {
        mask next = 0;
        for (int v = 0; v < x.n; ++v)
            if (frontier >> v & 1)
                for (int w = 0; w < x.n; ++w)
                    if (x.a[v][w] && (within >> w & 1) && !(seen >> w & 1))
                        next |= mask{1} << w;
        seen |= next;
        frontier = next;
    }
    return seen == within;
}

inline bool connected(const adjacency& x) { return connected_within(x, (mask{1} << x.n) - 1); }

inline bool two_connected(const adjacency& x)
{
    if (x.n < 3 || !connected(x))
        return false;
    const mask all = (mask{1} << x.n) - 1;
    for (int v = 0; v < x.n; ++v)
        if (!connected_within(x, all & ~(mask{1} << v)))
            return false;
    return true;
}

// All vertex permutations; only for tiny graphs.
inline bool isomorphic(const adjacency& x, const adjacency& y)
{
    if (x.n != y.n || x.edges.size() != y.edges.size())
        return false;
    std::vector<int> p(x.n);
    for (int i = 0; i < x.n; ++i)
        p[i] = i;
    do {
        bool ok = true;
        for (auto [u, v] : x.edges)
            if (!y.a[p[u]][p[v]]) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

} // namespace oracle

#endif // STRONGPROD_TESTS_ORACLE_HPP
