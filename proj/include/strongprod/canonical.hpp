#ifndef STRONGPROD_CANONICAL_HPP
#define STRONGPROD_CANONICAL_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace strongprod {

struct canonical_form {
    graph relabeled;         // vertex order given by `position`
    std::string key;         // graph6 of `relabeled`
    std::vector<int> position; // original vertex -> canonical index
};

namespace detail {

// Equitable refinement of an ordered colouring. Colours are ranks of
// (old colour, sorted neighbour colours), so the result does not depend on
// vertex names.
inline void refine(const graph& g, std::vector<int>& color)
{
    const int n = g.order();
    int classes = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& s = sig[v].first;
            s.push_back(color[v]);
            std::vector<int> nb;
            for (int w : g.neighbors(v))
                nb.push_back(color[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v].second = v;
        }
        std::vector<std::vector<int>> keys;
        keys.reserve(sig.size());
        for (auto& s : sig)
            keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        const int now = static_cast<int>(keys.size());
        if (now == classes)
            return;
        classes = now;
    }
}

inline void canonical_search(const graph& g, std::vector<int> color, canonical_form& best, bool& have)
{
    refine(g, color);
    const int n = g.order();
    // first non-singleton cell (lowest colour)
    std::vector<int> count(static_cast<std::size_t>(n), 0);
    for (int c : color)
        ++count[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (count[c] > 1) {
            target = c;
            break;
        }
    if (target < 0) {
        std::vector<edge> es;
        for (const edge& e : g.edges())
            es.emplace_back(color[e.u], color[e.v]);
        graph relabeled(n, es);
        std::string key = to_graph6(relabeled);
        if (!have || key < best.key) {
            best = {std::move(relabeled), std::move(key), color};
            have = true;
        }
        return;
    }
    // Twins in the target cell are swapped by an automorphism that keeps the
    // colouring, so their subtrees give the same leaves.
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
        if (color[v] != target)
            continue;
        const bool twin = std::any_of(tried.begin(), tried.end(), [&](int w) {
            return (g.neighbors(v) - vertex_set::singleton(w)) == (g.neighbors(w) - vertex_set::singleton(v));
        });
        if (twin)
            continue;
        tried.push_back(v);
        std::vector<int> next(color.size());
        for (int u = 0; u < n; ++u)
            next[u] = 2 * color[u] + (color[u] == target && u != v ? 1 : 0);
        canonical_search(g, std::move(next), best, have);
    }
}

} // namespace detail

// Canonical labelling by colour refinement plus individualisation: the
// minimum graph6 string over all leaves of the search tree. Two graphs are
// isomorphic iff their keys are equal. Only twin swaps are pruned, so
// highly symmetric graphs without twins can still be slow.
inline canonical_form canonicalize(const graph& g)
{
    if (g.order() < 1)
        throw domain_error("canonical form needs at least one vertex");
    std::vector<int> color(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        color[v] = g.degree(v);
    canonical_form best;
    bool have = false;
    detail::canonical_search(g, std::move(color), best, have);
    return best;
}

inline std::string canonical_key(const graph& g) { return canonicalize(g).key; }

inline bool isomorphic(const graph& a, const graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

} // namespace strongprod

#endif // STRONGPROD_CANONICAL_HPP
