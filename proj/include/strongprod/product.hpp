#ifndef STRONGPROD_PRODUCT_HPP
#define STRONGPROD_PRODUCT_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace strongprod {

inline constexpr int default_product_cap = 1024;

enum class factor { g, h };

// G ⊠ H with vertex (i, j) stored at index i*|V(H)| + j.
template <std::size_t W = 1>
class product_graph {
public:
    product_graph(basic_graph<W> p, strongprod::graph g, strongprod::graph h)
        : graph_(std::move(p)), g_(std::move(g)), h_(std::move(h)), g_order_(g_.order()),
          h_order_(h_.order())
    {
    }

    const basic_graph<W>& graph() const { return graph_; }
    const strongprod::graph& g_factor() const { return g_; }
    const strongprod::graph& h_factor() const { return h_; }
    int g_order() const { return g_order_; }
    int h_order() const { return h_order_; }

    int index(int i, int j) const { return i * h_order_ + j; }
    std::pair<int, int> coords(int v) const { return {v / h_order_, v % h_order_}; }

private:
    basic_graph<W> graph_;
    strongprod::graph g_;
    strongprod::graph h_;
    int g_order_;
    int h_order_;
};

// Adjacency: distinct (u1,v1), (u2,v2) with u2 ∈ N_G[u1] and v2 ∈ N_H[v1].
// The result width W must hold |V(G)|·|V(H)| vertices; `cap` bounds the
// order independently of W.
template <std::size_t W = 1>
product_graph<W> strong_product(const graph& g, const graph& h, int cap = default_product_cap)
{
    const int ng = g.order(), nh = h.order();
    if (ng < 1 || nh < 1)
        throw domain_error("strong product needs nonempty factors");
    const long total = static_cast<long>(ng) * nh;
    if (total > cap)
        throw capacity_error("product order " + std::to_string(total) + " exceeds cap "
                             + std::to_string(cap));
    if (total > basic_graph<W>::max_order)
        throw capacity_error("product order " + std::to_string(total) + " exceeds bit-set width "
                             + std::to_string(basic_graph<W>::max_order));
    std::vector<bit_set<W>> rows(static_cast<std::size_t>(total));
    std::vector<std::string> labels;
    labels.reserve(rows.size());
    for (int i = 0; i < ng; ++i) {
        auto gi = g.closed_neighbors(i);
        for (int j = 0; j < nh; ++j) {
            auto hj = h.closed_neighbors(j);
            auto& row = rows[static_cast<std::size_t>(i * nh + j)];
            for (int a : gi)
                for (int b : hj)
                    row.insert(a * nh + b);
            row.erase(i * nh + j);
            labels.push_back(std::to_string(i) + "," + std::to_string(j));
        }
    }
    return product_graph<W>(basic_graph<W>::from_rows(std::move(rows), std::move(labels)), g, h);
}

// Coordinates of S on one side, duplicates collapsed.
template <std::size_t WOut = 1, std::size_t W>
bit_set<WOut> project(const product_graph<W>& p, factor side, const bit_set<W>& s)
{
    bit_set<WOut> out;
    for (int v : s) {
        auto [i, j] = p.coords(v);
        out.insert(side == factor::g ? i : j);
    }
    return out;
}

} // namespace strongprod

#endif // STRONGPROD_PRODUCT_HPP
