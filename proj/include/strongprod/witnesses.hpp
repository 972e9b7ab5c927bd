#ifndef STRONGPROD_WITNESSES_HPP
#define STRONGPROD_WITNESSES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "checks.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "gallai_edmonds.hpp"
#include "graph.hpp"
#include "matching.hpp"
#include "product.hpp"

namespace strongprod {

// Output of one explicit construction. Every claim is re-checked against the
// definitions in checks.hpp; `verified` is true only if all of them pass.
struct witness_report {
    std::string construction;
    std::vector<graph> inputs;
    std::vector<std::pair<std::string, std::vector<int>>> choices; // I, S, ... as supplied
    graph host;                  // the product the matching lives in
    edge_set matching;           // M
    vertex_set uncovered;        // V(host) ∖ V(M)
    std::optional<graph> residual; // host − V(M), for the edge-domination constructions
    std::vector<edge_set> eds;   // minimal EDS claimed for the residual
    bool implies_not_equimatchable = false; // M is maximal and smaller than α′(host)
    bool verified = false;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
    void seal() { verified = failures.empty(); }
};

namespace detail {

inline vertex_set uncovered_by(const graph& host, const edge_set& m)
{
    return host.vertices() - endpoints<1>(m);
}

inline void check_maximal_matching(witness_report& r)
{
    r.require(checks::is_matching(r.host, r.matching), "M is not a matching of the product");
    r.require(checks::is_maximal_matching(r.host, r.matching), "M is not maximal");
    r.uncovered = uncovered_by(r.host, r.matching);
    r.implies_not_equimatchable = checks::is_maximal_matching(r.host, r.matching)
                                  && static_cast<int>(r.matching.size()) < matching_number(r.host);
}

// Residual host − V(M) and the claimed edge sets, translated to residual
// indices, each checked to be a minimal EDS; the two sizes must differ.
inline void check_residual_eds(witness_report& r, const std::vector<edge_set>& claimed)
{
    r.require(checks::is_matching(r.host, r.matching), "M is not a matching of the product");
    const vertex_set covered = endpoints<1>(r.matching);
    const vertex_set keep = r.host.vertices() - covered;
    std::vector<int> index(static_cast<std::size_t>(r.host.order()), -1);
    int k = 0;
    for (int v : keep)
        index[v] = k++;
    r.residual = induced_subgraph(r.host, keep);
    r.uncovered = keep;
    for (const edge_set& f : claimed) {
        edge_set local;
        for (const edge& e : f) {
            if (index[e.u] < 0 || index[e.v] < 0) {
                r.failures.push_back("claimed edge touches V(M)");
                continue;
            }
            local.emplace_back(index[e.u], index[e.v]);
        }
        local = normalized(local);
        r.require(checks::is_minimal_edge_dominating(*r.residual, local),
                  "claimed set of size " + std::to_string(local.size()) + " is not a minimal EDS");
        r.eds.push_back(local);
    }
    r.require(r.eds.size() == 2 && r.eds[0].size() != r.eds[1].size(), "claimed sets have equal size");
}

} // namespace detail

// K_{1,n} ⊠ K_{1,t}, centres u0 and v0 (index 0 in both stars):
// M = {(u0,vi)(u1,vi) : 1 ≤ i ≤ t} ∪ {(ui,v0)(ui,v1) : 3 ≤ i ≤ n}; in the
// residual, {(u0,v0)(u2,v0)} and {(u0,v0)(u1,v0), (u2,v0)(u2,v1)} are both
// minimal edge dominating sets.
inline witness_report mup_star_star(int n, int t)
{
    if (n < 2 || t < 2)
        throw domain_error("mup_star_star needs n >= 2 and t >= 2");
    witness_report r;
    r.construction = "mup-star-star";
    const graph g = named::star(n), h = named::star(t);
    r.inputs = {g, h};
    r.choices = {{"n", {n}}, {"t", {t}}};
    const auto p = strong_product(g, h, graph::max_order);
    r.host = p.graph();
    auto at = [&](int i, int j) { return p.index(i, j); };
    for (int i = 1; i <= t; ++i)
        r.matching.emplace_back(at(0, i), at(1, i));
    for (int i = 3; i <= n; ++i)
        r.matching.emplace_back(at(i, 0), at(i, 1));
    r.matching = normalized(r.matching);
    detail::check_residual_eds(r, {{edge(at(0, 0), at(2, 0))},
                                   {edge(at(0, 0), at(1, 0)), edge(at(2, 0), at(2, 1))}});
    r.seal();
    return r;
}

// K_{1,n} ⊠ K3 with K3 = {v1, v2, v3} at indices 0..2:
// M = {(ui,v1)(ui,v2) : 1 ≤ i ≤ n}; residual sets
// {(u0,v1)(u0,v2), (u0,v3)(u1,v3)} and
// {(u0,v1)(u0,v2)} ∪ {(u0,v1)(ui,v3) : 1 ≤ i ≤ n}.
inline witness_report mup_star_triangle(int n)
{
    if (n < 2)
        throw domain_error("mup_star_triangle needs n >= 2");
    witness_report r;
    r.construction = "mup-star-triangle";
    const graph g = named::star(n), h = named::complete(3);
    r.inputs = {g, h};
    r.choices = {{"n", {n}}};
    const auto p = strong_product(g, h, graph::max_order);
    r.host = p.graph();
    auto at = [&](int i, int j) { return p.index(i, j); };
    for (int i = 1; i <= n; ++i)
        r.matching.emplace_back(at(i, 0), at(i, 1));
    edge_set small{edge(at(0, 0), at(0, 1)), edge(at(0, 2), at(1, 2))};
    edge_set large{edge(at(0, 0), at(0, 1))};
    for (int i = 1; i <= n; ++i)
        large.emplace_back(at(0, 0), at(i, 2));
    detail::check_residual_eds(r, {small, large});
    r.seal();
    return r;
}

// Deterministic helper choices.
inline vertex_set choose_maximum_independent_set(const graph& g) { return maximum_independent_set(g); }

// Greedy maximal matching of G − excluded, in G's own indices.
inline edge_set choose_maximal_matching(const graph& g, const vertex_set& excluded = {})
{
    edge_set m;
    vertex_set used = excluded;
    for (const edge& e : g.edges()) {
        if (used.contains(e.u) || used.contains(e.v))
            continue;
        m.push_back(e);
        used.insert(e.u);
        used.insert(e.v);
    }
    return m;
}

// Perfect matching of G − v in G's indices, or nullopt.
inline std::optional<edge_set> choose_perfect_matching_avoiding(const graph& g, int v)
{
    const vertex_set keep = g.vertices() - vertex_set::singleton(v);
    const std::vector<int> back = keep.to_vector();
    const edge_set local = maximum_matching(induced_subgraph(g, keep));
    if (2 * static_cast<int>(local.size()) != g.order() - 1)
        return std::nullopt;
    edge_set out;
    for (const edge& e : local)
        out.emplace_back(back[e.u], back[e.v]);
    return normalized(out);
}

// G ⊠ P3, P3 = v1 v2 v3 at indices 0..2. For a maximum independent set I of
// G and a maximal matching Mg of G − I:
// M1 = {(u,v1)(u,v2) : u ∉ I}, M2 = {(u,v2)(u,v3) : u ∈ I},
// M3 = Mg lifted into layer v3. The uncovered set must equal
// I × {v1} ∪ (V(G) ∖ (V(Mg) ∪ I)) × {v3}.
inline witness_report p3_witness(const graph& g, const vertex_set& indep, const edge_set& mg)
{
    if (g.order() % 2 == 0 || !is_connected(g) || g.order() < 3)
        throw domain_error("p3_witness needs an odd, connected, nontrivial graph");
    if (!indep.is_subset_of(g.vertices()) || !checks::is_independent_set(g, indep)
        || indep.size() != independence_number(g))
        throw domain_error("I is not a maximum independent set");
    const vertex_set rest = g.vertices() - indep;
    const graph g_rest = induced_subgraph(g, rest);
    const std::vector<int> back = rest.to_vector();
    std::vector<int> local_index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < back.size(); ++i)
        local_index[back[i]] = static_cast<int>(i);
    edge_set mg_local;
    for (const edge& e : mg) {
        if (e.v >= g.order() || local_index[e.u] < 0 || local_index[e.v] < 0)
            throw domain_error("Mg has an edge outside G − I");
        mg_local.emplace_back(local_index[e.u], local_index[e.v]);
    }
    if (!checks::is_maximal_matching(g_rest, normalized(mg_local)))
        throw domain_error("Mg is not a maximal matching of G − I");

    witness_report r;
    r.construction = "p3";
    const graph p3 = named::path(3);
    r.inputs = {g, p3};
    r.choices = {{"I", indep.to_vector()}};
    std::vector<int> mg_flat;
    for (const edge& e : mg) {
        mg_flat.push_back(e.u);
        mg_flat.push_back(e.v);
    }
    r.choices.emplace_back("Mg", mg_flat);
    const auto p = strong_product(g, p3, graph::max_order);
    r.host = p.graph();
    for (int u = 0; u < g.order(); ++u) {
        if (indep.contains(u))
            r.matching.emplace_back(p.index(u, 1), p.index(u, 2));
        else
            r.matching.emplace_back(p.index(u, 0), p.index(u, 1));
    }
    for (const edge& e : mg)
        r.matching.emplace_back(p.index(e.u, 2), p.index(e.v, 2));
    r.matching = normalized(r.matching);
    detail::check_maximal_matching(r);

    vertex_set expected;
    const vertex_set leftover = g.vertices() - endpoints<1>(mg) - indep;
    for (int u : indep)
        expected.insert(p.index(u, 0));
    for (int u : leftover)
        expected.insert(p.index(u, 2));
    r.require(r.uncovered == expected, "uncovered set differs from I×{v1} ∪ (V∖(V(Mg)∪I))×{v3}");
    r.seal();
    return r;
}

inline witness_report p3_witness(const graph& g)
{
    const vertex_set indep = choose_maximum_independent_set(g);
    return p3_witness(g, indep, choose_maximal_matching(g, indep));
}

// G ⊠ K3. S = {u1, u2, u3} independent and Mi a perfect matching of G − ui;
// M = ⋃ Mi lifted into layer vi. Exactly (u1,v1), (u2,v2), (u3,v3) stay
// uncovered.
inline witness_report k3_witness(const graph& g, const std::vector<int>& s, const std::vector<edge_set>& ms)
{
    if (g.order() % 2 == 0)
        throw domain_error("k3_witness needs an odd graph");
    if (s.size() != 3 || ms.size() != 3)
        throw domain_error("k3_witness needs three vertices and three matchings");
    const vertex_set sv = vertex_set::from_range(s);
    if (sv.size() != 3 || !sv.is_subset_of(g.vertices()) || !checks::is_independent_set(g, sv))
        throw domain_error("S is not an independent set of size three");
    for (int i = 0; i < 3; ++i) {
        const edge_set mi = normalized(ms[i]);
        if (!checks::is_matching(g, mi) || 2 * static_cast<int>(mi.size()) != g.order() - 1
            || endpoints<1>(mi).contains(s[i]))
            throw domain_error("M" + std::to_string(i + 1) + " is not a perfect matching of G − u"
                               + std::to_string(i + 1));
    }

    witness_report r;
    r.construction = "k3";
    const graph k3 = named::complete(3);
    r.inputs = {g, k3};
    r.choices = {{"S", s}};
    const auto p = strong_product(g, k3, graph::max_order);
    r.host = p.graph();
    for (int i = 0; i < 3; ++i)
        for (const edge& e : ms[i])
            r.matching.emplace_back(p.index(e.u, i), p.index(e.v, i));
    r.matching = normalized(r.matching);
    detail::check_maximal_matching(r);
    vertex_set expected;
    for (int i = 0; i < 3; ++i)
        expected.insert(p.index(s[i], i));
    r.require(r.uncovered == expected, "uncovered set is not {(ui, vi)}");
    r.seal();
    return r;
}

inline witness_report k3_witness(const graph& g, const std::vector<int>& s)
{
    std::vector<edge_set> ms;
    for (int v : s) {
        if (v < 0 || v >= g.order())
            throw domain_error("vertex out of range");
        auto m = choose_perfect_matching_avoiding(g, v);
        if (!m)
            throw domain_error("G − " + std::to_string(v) + " has no perfect matching");
        ms.push_back(*m);
    }
    return k3_witness(g, s, ms);
}

// G ⊠ H from maximum matchings Mg, Mh:
// M1 = {(u,vj)(u,v′j) : u ∈ V(G), vjv′j ∈ Mh},
// M2 = {(ui,v)(u′i,v) : uiu′i ∈ Mg, v ∉ V(Mh)}; the uncovered set must be
// (V(G) ∖ V(Mg)) × (V(H) ∖ V(Mh)).
inline witness_report product_matching(const graph& g, const graph& h, const edge_set& mg, const edge_set& mh)
{
    if (!checks::is_matching(g, normalized(mg)) || static_cast<int>(mg.size()) != matching_number(g))
        throw domain_error("Mg is not a maximum matching of G");
    if (!checks::is_matching(h, normalized(mh)) || static_cast<int>(mh.size()) != matching_number(h))
        throw domain_error("Mh is not a maximum matching of H");
    witness_report r;
    r.construction = "product-matching";
    r.inputs = {g, h};
    const auto p = strong_product(g, h, graph::max_order);
    r.host = p.graph();
    const vertex_set h_cov = endpoints<1>(mh);
    for (int u = 0; u < g.order(); ++u)
        for (const edge& e : mh)
            r.matching.emplace_back(p.index(u, e.u), p.index(u, e.v));
    for (const edge& e : mg)
        for (int v : h.vertices() - h_cov)
            r.matching.emplace_back(p.index(e.u, v), p.index(e.v, v));
    r.matching = normalized(r.matching);
    detail::check_maximal_matching(r);
    vertex_set expected;
    for (int u : g.vertices() - endpoints<1>(mg))
        for (int v : h.vertices() - h_cov)
            expected.insert(p.index(u, v));
    r.require(r.uncovered == expected, "uncovered set is not (V(G)∖V(Mg)) × (V(H)∖V(Mh))");
    r.seal();
    return r;
}

inline witness_report product_matching(const graph& g, const graph& h)
{
    return product_matching(g, h, maximum_matching(g), maximum_matching(h));
}

// For odd, connected, equimatchable G with a near-perfect matching and
// α(G) > 2: an independent triple S ⊆ D(G), so G − v has a perfect
// matching for each v ∈ S. Candidates come from the Gallai–Edmonds
// components; the result is re-checked and a failure throws
// theorem_violation.
inline vertex_set find_independent_triple(const graph& g)
{
    if (g.order() % 2 == 0 || !is_connected(g))
        throw domain_error("needs an odd connected graph");
    if (!has_near_perfect_matching(g))
        throw domain_error("needs a near-perfect matching");
    if (independence_number(g) <= 2)
        throw domain_error("needs independence number above two");
    if (!is_equimatchable(g).holds())
        throw domain_error("needs an equimatchable graph");

    const auto dec = decompose(g);
    const int c = dec.component_count();
    vertex_set s;
    auto first_three = [](const vertex_set& x) {
        vertex_set out;
        for (int v : x) {
            if (out.size() == 3)
                break;
            out.insert(v);
        }
        return out;
    };
    if (c > 2) {
        for (int k = 0; k < 3; ++k)
            s.insert(dec.d_components[k].first());
    } else if (c == 1) {
        // A = ∅ and C = ∅, so D = V(G)
        s = first_three(maximum_independent_set(g) & dec.d);
    } else if (c == 2 && dec.a.size() == 1) {
        const int u0 = dec.a.first();
        int full = -1;
        for (int k = 0; k < 2; ++k)
            if (dec.d_components[k].is_subset_of(g.neighbors(u0))) {
                full = k;
                break;
            }
        if (full < 0)
            throw theorem_violation("A-vertex is adjacent to all of neither D-component");
        vertex_set mis = maximum_independent_set(g);
        if (mis.contains(u0)) {
            mis.erase(u0);
            mis.insert(dec.d_components[full].first());
        }
        s = first_three(mis);
    }
    if (s.size() != 3 || !checks::is_independent_set(g, s) || !s.is_subset_of(dec.d))
        throw theorem_violation("no independent triple found in D(G)");
    for (int v : s)
        if (!has_perfect_matching(remove_vertex(g, v)))
            throw theorem_violation("G − v has no perfect matching for a chosen v");
    return s;
}

} // namespace strongprod

#endif // STRONGPROD_WITNESSES_HPP
