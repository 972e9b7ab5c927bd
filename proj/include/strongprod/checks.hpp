#ifndef STRONGPROD_CHECKS_HPP
#define STRONGPROD_CHECKS_HPP

#include <cstddef>
#include <vector>

#include "graph.hpp"

// Direct re-checks of the definitions. These are deliberately naive and share
// no code with the search routines, so certificates produced by the searches
// can be validated through an independent path.
namespace strongprod::checks {

template <std::size_t W>
bool is_dominating(const basic_graph<W>& g, const bit_set<W>& d)
{
    for (int v = 0; v < g.order(); ++v) {
        if (d.contains(v))
            continue;
        bool hit = false;
        for (int w : g.neighbors(v))
            hit = hit || d.contains(w);
        if (!hit)
            return false;
    }
    return true;
}

template <std::size_t W>
bool is_minimal_dominating(const basic_graph<W>& g, const bit_set<W>& d)
{
    if (!d.is_subset_of(g.vertices()) || !is_dominating(g, d))
        return false;
    for (int v : d) {
        bit_set<W> smaller = d;
        smaller.erase(v);
        if (is_dominating(g, smaller))
            return false;
    }
    return true;
}

template <std::size_t W>
bool is_independent_set(const basic_graph<W>& g, const bit_set<W>& s)
{
    for (int a : s)
        for (int b : s)
            if (a < b && g.adjacent(a, b))
                return false;
    return true;
}

template <std::size_t W>
bool is_maximal_independent(const basic_graph<W>& g, const bit_set<W>& s)
{
    if (!s.is_subset_of(g.vertices()) || !is_independent_set(g, s))
        return false;
    for (int v = 0; v < g.order(); ++v) {
        if (s.contains(v))
            continue;
        bit_set<W> bigger = s;
        bigger.insert(v);
        if (is_independent_set(g, bigger))
            return false;
    }
    return true;
}

template <std::size_t W>
bool edges_belong(const basic_graph<W>& g, const edge_set& f)
{
    for (const edge& e : f)
        if (!g.has_edge(e))
            return false;
    return true;
}

template <std::size_t W>
bool is_edge_dominating(const basic_graph<W>& g, const edge_set& f)
{
    for (const edge& e : g.edges()) {
        bool hit = false;
        for (const edge& x : f)
            hit = hit || x == e || x.adjacent_to(e);
        if (!hit)
            return false;
    }
    return true;
}

template <std::size_t W>
bool is_minimal_edge_dominating(const basic_graph<W>& g, const edge_set& f)
{
    if (!edges_belong(g, f) || !is_edge_dominating(g, f))
        return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        edge_set smaller;
        for (std::size_t j = 0; j < f.size(); ++j)
            if (j != i)
                smaller.push_back(f[j]);
        if (is_edge_dominating(g, smaller))
            return false;
    }
    return true;
}

template <std::size_t W>
bool is_matching(const basic_graph<W>& g, const edge_set& m)
{
    if (!edges_belong(g, m))
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i] == m[j] || m[i].adjacent_to(m[j]))
                return false;
    return true;
}

template <std::size_t W>
bool is_maximal_matching(const basic_graph<W>& g, const edge_set& m)
{
    if (!is_matching(g, m))
        return false;
    for (const edge& e : g.edges()) {
        bool blocked = false;
        for (const edge& x : m)
            blocked = blocked || x == e || x.adjacent_to(e);
        if (!blocked)
            return false;
    }
    return true;
}

// Clique partition by closed neighbourhoods of `centers`.
template <std::size_t W>
bool is_clique_partition(const basic_graph<W>& g, const std::vector<int>& centers)
{
    std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
    for (int c : centers) {
        if (c < 0 || c >= g.order())
            return false;
        std::vector<int> block{c};
        for (int w : g.neighbors(c))
            block.push_back(w);
        for (int a : block) {
            ++hits[a];
            for (int b : block)
                if (a != b && !g.adjacent(a, b))
                    return false;
        }
    }
    for (int h : hits)
        if (h != 1)
            return false;
    return true;
}

} // namespace strongprod::checks

#endif // STRONGPROD_CHECKS_HPP
