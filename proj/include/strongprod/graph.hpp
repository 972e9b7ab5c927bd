#ifndef STRONGPROD_GRAPH_HPP
#define STRONGPROD_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "errors.hpp"

namespace strongprod {

struct edge {
    int u = 0; // u < v
    int v = 0;

    edge() = default;
    edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

    bool touches(int x) const { return u == x || v == x; }
    bool adjacent_to(const edge& o) const { return touches(o.u) || touches(o.v); }

    friend auto operator<=>(const edge&, const edge&) = default;
};

// Sorted, duplicate-free list of edges.
using edge_set = std::vector<edge>;

inline edge_set normalized(edge_set es)
{
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

// Immutable simple undirected graph on vertices 0..n-1. Adjacency rows are
// bit sets of width 64*Words, so n is bounded by that width.
template <std::size_t Words = 1>
class basic_graph {
public:
    using vertex_set = bit_set<Words>;
    static constexpr int max_order = vertex_set::capacity;

    basic_graph() = default;

    basic_graph(int n, const std::vector<edge>& edges, std::vector<std::string> labels = {})
        : n_(n), adj_(static_cast<std::size_t>(n)), labels_(std::move(labels))
    {
        if (n < 0 || n > max_order)
            throw capacity_error("graph order " + std::to_string(n) + " exceeds bit-set width "
                                 + std::to_string(max_order));
        if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(n))
            throw domain_error("label count does not match vertex count");
        for (const edge& e : edges) {
            if (e.u < 0 || e.v >= n)
                throw domain_error("edge endpoint out of range");
            if (e.u == e.v)
                throw domain_error("self-loop on vertex " + std::to_string(e.u));
            adj_[e.u].insert(e.v);
            adj_[e.v].insert(e.u);
        }
    }

    // Rows must already be symmetric and irreflexive; checked.
    static basic_graph from_rows(std::vector<vertex_set> rows, std::vector<std::string> labels = {})
    {
        basic_graph g;
        g.n_ = static_cast<int>(rows.size());
        if (g.n_ > max_order)
            throw capacity_error("graph order exceeds bit-set width");
        g.adj_ = std::move(rows);
        g.labels_ = std::move(labels);
        for (int v = 0; v < g.n_; ++v) {
            if (g.adj_[v].contains(v))
                throw domain_error("self-loop on vertex " + std::to_string(v));
            if (!g.adj_[v].is_subset_of(vertex_set::prefix(g.n_)))
                throw domain_error("adjacency row out of range");
            for (int w : g.adj_[v])
                if (!g.adj_[w].contains(v))
                    throw domain_error("asymmetric adjacency");
        }
        return g;
    }

    int order() const { return n_; }
    int size() const
    {
        int m = 0;
        for (const auto& row : adj_)
            m += row.size();
        return m / 2;
    }

    const vertex_set& neighbors(int v) const { return adj_[v]; }
    vertex_set closed_neighbors(int v) const
    {
        vertex_set s = adj_[v];
        s.insert(v);
        return s;
    }
    int degree(int v) const { return adj_[v].size(); }
    bool adjacent(int a, int b) const { return adj_[a].contains(b); }
    bool has_edge(const edge& e) const { return e.u != e.v && e.v < n_ && adj_[e.u].contains(e.v); }

    vertex_set vertices() const { return vertex_set::prefix(n_); }

    // Lexicographic on (min endpoint, max endpoint).
    std::vector<edge> edges() const
    {
        std::vector<edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (v > u)
                    out.emplace_back(u, v);
        return out;
    }

    // Union of N(v) over v in s.
    vertex_set neighborhood(const vertex_set& s) const
    {
        vertex_set out;
        for (int v : s)
            out |= adj_[v];
        return out;
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const basic_graph& a, const basic_graph& b)
    {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    int n_ = 0;
    std::vector<vertex_set> adj_;
    std::vector<std::string> labels_;
};

using graph = basic_graph<1>;
using vertex_set = bit_set<1>;

template <std::size_t W>
bool is_independent(const basic_graph<W>& g, const bit_set<W>& s)
{
    for (int v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

template <std::size_t W>
bool is_clique(const basic_graph<W>& g, const bit_set<W>& s)
{
    for (int v : s) {
        bit_set<W> rest = s;
        rest.erase(v);
        if (!rest.is_subset_of(g.neighbors(v)))
            return false;
    }
    return true;
}

template <std::size_t W>
bool is_complete(const basic_graph<W>& g)
{
    return is_clique(g, g.vertices());
}

// Result keeps survivors in ascending order; labels carried along.
template <std::size_t W>
basic_graph<W> induced_subgraph(const basic_graph<W>& g, const bit_set<W>& keep)
{
    if (!keep.is_subset_of(g.vertices()))
        throw domain_error("vertex set is not a subset of V(G)");
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> kept = keep.to_vector();
    for (std::size_t i = 0; i < kept.size(); ++i)
        index[kept[i]] = static_cast<int>(i);
    std::vector<bit_set<W>> rows(kept.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (int w : g.neighbors(kept[i]) & keep)
            rows[i].insert(index[w]);
        if (g.has_labels())
            labels.push_back(g.labels()[kept[i]]);
    }
    return basic_graph<W>::from_rows(std::move(rows), std::move(labels));
}

template <std::size_t W>
basic_graph<W> remove_vertices(const basic_graph<W>& g, const bit_set<W>& drop)
{
    if (!drop.is_subset_of(g.vertices()))
        throw domain_error("vertex set is not a subset of V(G)");
    return induced_subgraph(g, g.vertices() - drop);
}

template <std::size_t W>
basic_graph<W> remove_vertex(const basic_graph<W>& g, int v)
{
    return remove_vertices(g, bit_set<W>::singleton(v));
}

// Vertex set of the component containing `start`, restricted to `within`.
template <std::size_t W>
bit_set<W> component_of(const basic_graph<W>& g, int start, const bit_set<W>& within)
{
    bit_set<W> seen = bit_set<W>::singleton(start);
    bit_set<W> frontier = seen;
    while (frontier.any()) {
        bit_set<W> next;
        for (int v : frontier)
            next |= g.neighbors(v);
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

// Components ordered by smallest member.
template <std::size_t W>
std::vector<bit_set<W>> components(const basic_graph<W>& g, const bit_set<W>& within)
{
    std::vector<bit_set<W>> out;
    bit_set<W> rest = within;
    while (rest.any()) {
        bit_set<W> c = component_of(g, rest.first(), within);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

template <std::size_t W>
std::vector<bit_set<W>> components(const basic_graph<W>& g)
{
    return components(g, g.vertices());
}

template <std::size_t W>
bool is_connected(const basic_graph<W>& g)
{
    return g.order() > 0 && component_of(g, 0, g.vertices()) == g.vertices();
}

// Vertex-deletion definition: at least k+1 vertices and connected after
// removing any k-1 of them. K2 is 1-connected but not 2-connected.
template <std::size_t W>
bool is_k_connected(const basic_graph<W>& g, int k)
{
    if (k < 1 || k > 2)
        throw domain_error("only k = 1 and k = 2 are supported");
    if (!is_connected(g) || g.order() < k + 1)
        return false;
    if (k == 1)
        return true;
    for (int v = 0; v < g.order(); ++v) {
        bit_set<W> rest = g.vertices();
        rest.erase(v);
        if (component_of(g, rest.first(), rest) != rest)
            return false;
    }
    return true;
}

template <std::size_t W>
bool is_bipartite(const basic_graph<W>& g)
{
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

template <std::size_t W>
bit_set<W> endpoints(const edge_set& es)
{
    bit_set<W> s;
    for (const edge& e : es) {
        s.insert(e.u);
        s.insert(e.v);
    }
    return s;
}

// Vertices of the result are the edges of `source`, in edges() order.
template <std::size_t W>
struct line_graph_result {
    basic_graph<W> graph;
    std::vector<edge> source; // line-graph vertex -> edge of the original
};

template <std::size_t Wout, std::size_t Win>
line_graph_result<Wout> line_graph(const basic_graph<Win>& g)
{
    std::vector<edge> es = g.edges();
    if (es.empty())
        throw domain_error("line graph of an edgeless graph is empty");
    if (static_cast<int>(es.size()) > basic_graph<Wout>::max_order)
        throw capacity_error("line graph has " + std::to_string(es.size()) + " vertices, more than "
                             + std::to_string(basic_graph<Wout>::max_order));
    // incident[v] = line-graph vertices whose edge touches v
    std::vector<bit_set<Wout>> incident(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < es.size(); ++i) {
        incident[es[i].u].insert(static_cast<int>(i));
        incident[es[i].v].insert(static_cast<int>(i));
    }
    std::vector<bit_set<Wout>> rows(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        rows[i] = incident[es[i].u] | incident[es[i].v];
        rows[i].erase(static_cast<int>(i));
    }
    return {basic_graph<Wout>::from_rows(std::move(rows)), std::move(es)};
}

// Invokes f(std::integral_constant<std::size_t, W>{}) with the smallest
// supported word count holding n elements.
template <class F>
decltype(auto) with_width(int n, F&& f)
{
    if (n <= 64)
        return f(std::integral_constant<std::size_t, 1>{});
    if (n <= 128)
        return f(std::integral_constant<std::size_t, 2>{});
    if (n <= 256)
        return f(std::integral_constant<std::size_t, 4>{});
    if (n <= 512)
        return f(std::integral_constant<std::size_t, 8>{});
    if (n <= 1024)
        return f(std::integral_constant<std::size_t, 16>{});
    throw capacity_error("more than 1024 elements are not supported");
}

// Copy of g with wider (or equal) adjacency rows.
template <std::size_t Wout, std::size_t Win>
basic_graph<Wout> widen(const basic_graph<Win>& g)
{
    return basic_graph<Wout>(g.order(), g.edges(), g.labels());
}

} // namespace strongprod

#endif // STRONGPROD_GRAPH_HPP
