#ifndef STRONGPROD_CORPUS_HPP
#define STRONGPROD_CORPUS_HPP

#include <algorithm>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace strongprod {

inline constexpr int generator_max_order = 7;

// Pairwise non-isomorphic graphs, each stored in canonical labelling.
struct corpus {
    std::string source; // "generator" or the ingested file name
    int min_order = 1;
    int max_order = 1;
    bool connected_only = true;
    std::vector<graph> graphs;
    std::vector<std::string> keys; // canonical graph6, parallel to graphs

    std::size_t size() const { return graphs.size(); }
    auto begin() const { return graphs.begin(); }
    auto end() const { return graphs.end(); }
};

namespace detail {

// All graphs on n vertices up to isomorphism, sorted by (edges, key). Built
// by adding a vertex with every possible neighbourhood to each graph on
// n − 1 vertices; deleting any vertex of a graph on n vertices lands on a
// graph one level down, so nothing is missed.
inline const std::vector<canonical_form>& all_graphs(int n)
{
    static std::mutex mu;
    static std::map<int, std::vector<canonical_form>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty())
        cache.emplace(1, std::vector<canonical_form>{canonicalize(graph(1, {}))});
    for (int k = 2; k <= n; ++k) {
        if (cache.count(k))
            continue;
        std::map<std::string, canonical_form> seen;
        for (const canonical_form& base : cache.at(k - 1)) {
            const std::vector<edge> es = base.relabeled.edges();
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<edge> grown = es;
                for (int v = 0; v < k - 1; ++v)
                    if (mask & (1u << v))
                        grown.emplace_back(v, k - 1);
                canonical_form cf = canonicalize(graph(k, grown));
                seen.try_emplace(cf.key, std::move(cf));
            }
        }
        std::vector<canonical_form> out;
        for (auto& [key, cf] : seen)
            out.push_back(std::move(cf));
        std::stable_sort(out.begin(), out.end(), [](const canonical_form& a, const canonical_form& b) {
            return a.relabeled.size() < b.relabeled.size();
        });
        cache.emplace(k, std::move(out));
    }
    return cache.at(n);
}

} // namespace detail

// One representative per isomorphism class of connected graphs on n
// vertices, 1 <= n <= 7, ordered by edge count and then canonical graph6.
inline corpus enumerate_connected_graphs(int n)
{
    if (n < 1)
        throw domain_error("order must be at least 1");
    if (n > generator_max_order)
        throw capacity_error("the internal generator stops at 7 vertices; supply a graph6 file");
    corpus c;
    c.source = "generator";
    c.min_order = c.max_order = n;
    for (const canonical_form& cf : detail::all_graphs(n)) {
        if (!is_connected(cf.relabeled))
            continue;
        c.graphs.push_back(cf.relabeled);
        c.keys.push_back(cf.key);
    }
    return c;
}

// Concatenation over lo..hi.
inline corpus enumerate_connected_graphs(int lo, int hi)
{
    corpus out;
    out.source = "generator";
    out.min_order = lo;
    out.max_order = hi;
    for (int n = lo; n <= hi; ++n) {
        corpus c = enumerate_connected_graphs(n);
        out.graphs.insert(out.graphs.end(), c.graphs.begin(), c.graphs.end());
        out.keys.insert(out.keys.end(), c.keys.begin(), c.keys.end());
    }
    return out;
}

// graph6 lines (blank lines and lines starting with '#' skipped). Keeps the
// first graph of each isomorphism class in file order, after the order and
// connectivity filters.
inline corpus read_graph6_corpus(std::istream& in, const std::string& name, int lo = 1,
                                 int hi = graph6_max_order, bool connected_only = true)
{
    corpus c;
    c.source = name;
    c.min_order = lo;
    c.max_order = hi;
    c.connected_only = connected_only;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        graph g;
        try {
            g = from_graph6(line);
        } catch (const parse_error& e) {
            throw parse_error(name + " line " + std::to_string(line_no) + ": " + e.what(), e.offset());
        }
        if (g.order() < lo || g.order() > hi || (connected_only && !is_connected(g)))
            continue;
        canonical_form cf = canonicalize(g);
        if (!seen.insert(cf.key).second)
            continue;
        c.graphs.push_back(cf.relabeled);
        c.keys.push_back(cf.key);
    }
    return c;
}

} // namespace strongprod

#endif // STRONGPROD_CORPUS_HPP
