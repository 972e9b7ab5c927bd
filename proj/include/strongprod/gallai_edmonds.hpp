#ifndef STRONGPROD_GALLAI_EDMONDS_HPP
#define STRONGPROD_GALLAI_EDMONDS_HPP

#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace strongprod {

// V(G) = A ⊎ C ⊎ D where D holds the vertices missed by some maximum
// matching, A = N(D) ∖ D and C the rest.
template <std::size_t W = 1>
struct ge_decomposition {
    bit_set<W> a, c, d;
    std::vector<bit_set<W>> d_components; // components of G[D], by smallest member

    bit_set<W> b() const { return a | c; }
    int component_count() const { return static_cast<int>(d_components.size()); }
};

// D by vertex deletion: v is missed by some maximum matching iff
// α′(G − v) = α′(G).
template <std::size_t W>
ge_decomposition<W> decompose(const basic_graph<W>& g)
{
    if (g.order() < 1)
        throw domain_error("graph must have at least one vertex");
    const int nu = matching_number(g);
    ge_decomposition<W> out;
    for (int v = 0; v < g.order(); ++v)
        if (matching_number(remove_vertex(g, v)) == nu)
            out.d.insert(v);
    out.a = g.neighborhood(out.d) - out.d;
    out.c = g.vertices() - out.a - out.d;
    out.d_components = components(g, out.d);
    return out;
}

struct check_report {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

// A = N(D) ∖ D, and (i) each component of G[D] is factor-critical;
// (ii) every maximum matching matches each A-vertex into D, with distinct
// A-vertices landing in distinct components. Maximum matchings are
// enumerated exhaustively.
template <std::size_t W>
check_report verify_structure(const basic_graph<W>& g, const ge_decomposition<W>& dec)
{
    check_report rep;
    const int n = g.order();
    if ((dec.a | dec.c | dec.d) != g.vertices() || dec.a.intersects(dec.c) || dec.a.intersects(dec.d)
        || dec.c.intersects(dec.d))
        rep.violations.push_back("A, C, D do not partition V(G)");
    if (dec.a != g.neighborhood(dec.d) - dec.d)
        rep.violations.push_back("A is not N(D) minus D");
    std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < dec.d_components.size(); ++k) {
        for (int v : dec.d_components[k])
            comp_of[v] = static_cast<int>(k);
        if (!is_factor_critical(induced_subgraph(g, dec.d_components[k])))
            rep.violations.push_back("component " + std::to_string(k) + " of G[D] is not factor-critical");
    }
    for_each_maximum_matching(g, [&](const edge_set& m) {
        std::vector<int> mate(static_cast<std::size_t>(n), -1);
        for (const edge& e : m) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
        std::vector<char> used(dec.d_components.size(), 0);
        for (int x : dec.a) {
            const int y = mate[x];
            if (y < 0 || comp_of[y] < 0) {
                rep.violations.push_back("A-vertex " + std::to_string(x) + " not matched into D");
                return false;
            }
            if (used[comp_of[y]]++) {
                rep.violations.push_back("two A-vertices matched into one component of G[D]");
                return false;
            }
        }
        return true;
    });
    return rep;
}

// For odd, connected, equimatchable G: C(G) is empty and A(G) is independent.
template <std::size_t W>
check_report check_lemma_independent(const basic_graph<W>& g)
{
    if (g.order() % 2 == 0 || !is_connected(g))
        throw domain_error("needs an odd connected graph");
    if (!is_equimatchable(g).holds())
        throw domain_error("needs an equimatchable graph");
    check_report rep;
    const auto dec = decompose(g);
    if (dec.c.any())
        rep.violations.push_back("C(G) is not empty");
    if (!is_independent(g, dec.a))
        rep.violations.push_back("A(G) is not independent");
    return rep;
}

} // namespace strongprod

#endif // STRONGPROD_GALLAI_EDMONDS_HPP
