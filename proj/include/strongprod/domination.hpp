#ifndef STRONGPROD_DOMINATION_HPP
#define STRONGPROD_DOMINATION_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "budget.hpp"
#include "checks.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "product.hpp"
#include "verdict.hpp"

namespace strongprod {

namespace detail {

// last_chance[i] = vertices whose closed neighbourhood has maximum index i,
// i.e. whose domination is settled once vertex i has been decided.
template <std::size_t W>
std::vector<bit_set<W>> last_chance(const basic_graph<W>& g)
{
    std::vector<bit_set<W>> out(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w)
        out[g.closed_neighbors(w).last()].insert(w);
    return out;
}

template <std::size_t W, class Visitor>
class mds_search {
public:
    mds_search(const basic_graph<W>& g, Visitor& visit, const budget& b)
        : g_(g), visit_(visit), tracker_(b), last_(last_chance(g))
    {
        for (int v = 0; v < g.order(); ++v)
            closed_.push_back(g.closed_neighbors(v));
    }

    enum_status run()
    {
        bit_set<W> none;
        if (auto r = dfs(0, none, none, none))
            return *r;
        return enum_status::complete;
    }

private:
    // dom1: dominated at least once, dom2: at least twice.
    std::optional<enum_status> dfs(int i, const bit_set<W>& d, const bit_set<W>& dom1,
                                   const bit_set<W>& dom2)
    {
        if (!tracker_.tick())
            return enum_status::timed_out;
        if (i == g_.order()) {
            if (!tracker_.admit_result())
                return enum_status::truncated;
            if (!visit_(d))
                return enum_status::stopped;
            return std::nullopt;
        }
        // include i first: yields results in lexicographic order
        {
            bit_set<W> d2 = d;
            d2.insert(i);
            bit_set<W> twice = dom2 | (dom1 & closed_[i]);
            bit_set<W> once = dom1 | closed_[i];
            bool ok = last_[i].is_subset_of(once);
            // every member keeps a potential private neighbour; monotone in D
            for (int v : d2) {
                if (!ok)
                    break;
                ok = (closed_[v] - twice).any();
            }
            if (ok)
                if (auto r = dfs(i + 1, d2, once, twice))
                    return r;
        }
        if (last_[i].is_subset_of(dom1))
            if (auto r = dfs(i + 1, d, dom1, dom2))
                return r;
        return std::nullopt;
    }

    const basic_graph<W>& g_;
    Visitor& visit_;
    budget_tracker tracker_;
    std::vector<bit_set<W>> last_;
    std::vector<bit_set<W>> closed_;
};

template <std::size_t W, class Visitor>
class mis_search {
public:
    mis_search(const basic_graph<W>& g, Visitor& visit, const budget& b)
        : g_(g), visit_(visit), tracker_(b), last_(last_chance(g))
    {
    }

    enum_status run()
    {
        bit_set<W> none;
        if (auto r = dfs(0, none, none))
            return *r;
        return enum_status::complete;
    }

private:
    std::optional<enum_status> dfs(int i, const bit_set<W>& s, const bit_set<W>& covered)
    {
        if (!tracker_.tick())
            return enum_status::timed_out;
        if (i == g_.order()) {
            if (!tracker_.admit_result())
                return enum_status::truncated;
            if (!visit_(s))
                return enum_status::stopped;
            return std::nullopt;
        }
        if (!g_.neighbors(i).intersects(s)) {
            bit_set<W> s2 = s;
            s2.insert(i);
            bit_set<W> c2 = covered | g_.closed_neighbors(i);
            if (last_[i].is_subset_of(c2))
                if (auto r = dfs(i + 1, s2, c2))
                    return r;
        }
        if (last_[i].is_subset_of(covered))
            if (auto r = dfs(i + 1, s, covered))
                return r;
        return std::nullopt;
    }

    const basic_graph<W>& g_;
    Visitor& visit_;
    budget_tracker tracker_;
    std::vector<bit_set<W>> last_;
};

template <std::size_t W>
void require_nonempty(const basic_graph<W>& g)
{
    if (g.order() < 1)
        throw domain_error("graph must have at least one vertex");
}

} // namespace detail

// Calls visit(const bit_set<W>&) -> bool for every inclusion-minimal
// dominating set, in lexicographic order of the sorted member lists.
// Returning false from the visitor stops the search.
//
// Branches on vertices 0..n-1 (in / out). A branch dies when some vertex can
// no longer be dominated, or when a chosen vertex has lost every possible
// private neighbour.
template <std::size_t W, class Visitor>
enum_status for_each_minimal_dominating_set(const basic_graph<W>& g, Visitor&& visit,
                                            const budget& b = {})
{
    detail::require_nonempty(g);
    detail::mds_search<W, std::remove_reference_t<Visitor>> s(g, visit, b);
    return s.run();
}

template <std::size_t W>
enumeration<bit_set<W>> enumerate_minimal_dominating_sets(const basic_graph<W>& g,
                                                          const enumeration_options& opt = {})
{
    return collect<bit_set<W>>(
        [&](auto&& visit, const budget& b) { return for_each_minimal_dominating_set(g, visit, b); },
        opt);
}

// Inclusion-maximal independent sets, lexicographic order.
template <std::size_t W, class Visitor>
enum_status for_each_maximal_independent_set(const basic_graph<W>& g, Visitor&& visit,
                                             const budget& b = {})
{
    detail::require_nonempty(g);
    detail::mis_search<W, std::remove_reference_t<Visitor>> s(g, visit, b);
    return s.run();
}

template <std::size_t W>
enumeration<bit_set<W>> enumerate_maximal_independent_sets(const basic_graph<W>& g,
                                                           const enumeration_options& opt = {})
{
    return collect<bit_set<W>>(
        [&](auto&& visit, const budget& b) { return for_each_maximal_independent_set(g, visit, b); },
        opt);
}

namespace detail {

template <std::size_t W>
class min_dominating_search {
public:
    explicit min_dominating_search(const basic_graph<W>& g) : g_(g), all_(g.vertices())
    {
        best_ = all_;
        for (int v = 0; v < g.order(); ++v)
            closed_.push_back(g.closed_neighbors(v));
    }

    bit_set<W> run()
    {
        rec(bit_set<W>{}, bit_set<W>{}, bit_set<W>{});
        return best_;
    }

private:
    void rec(const bit_set<W>& d, const bit_set<W>& dominated, bit_set<W> forbidden)
    {
        if (dominated == all_) {
            if (d.size() < best_.size())
                best_ = d;
            return;
        }
        const int have = d.size();
        if (have + 1 >= best_.size())
            return;
        const bit_set<W> open = all_ - dominated;
        int reach = 0;
        for (int v : all_ - forbidden)
            reach = std::max(reach, (closed_[v] & open).size());
        if (reach == 0)
            return;
        const int need = (open.size() + reach - 1) / reach;
        if (have + need >= best_.size())
            return;
        // undominated vertex with the fewest remaining dominators
        int pick = -1, fewest = g_.order() + 1;
        for (int w : open) {
            int c = (closed_[w] - forbidden).size();
            if (c < fewest) {
                fewest = c;
                pick = w;
            }
        }
        if (fewest == 0)
            return;
        std::vector<int> cand = (closed_[pick] - forbidden).to_vector();
        std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) {
            return (closed_[a] & open).size() > (closed_[b] & open).size();
        });
        for (int v : cand) {
            bit_set<W> d2 = d;
            d2.insert(v);
            rec(d2, dominated | closed_[v], forbidden);
            forbidden.insert(v);
        }
    }

    const basic_graph<W>& g_;
    bit_set<W> all_;
    bit_set<W> best_;
    std::vector<bit_set<W>> closed_;
};

template <std::size_t W>
class max_independent_search {
public:
    explicit max_independent_search(const basic_graph<W>& g) : g_(g) {}

    bit_set<W> run()
    {
        rec(g_.vertices(), bit_set<W>{});
        return best_;
    }

private:
    void rec(const bit_set<W>& open, const bit_set<W>& cur)
    {
        if (cur.size() + open.size() <= best_.size())
            return;
        if (open.empty()) {
            best_ = cur;
            return;
        }
        int lo = -1, lo_deg = g_.order() + 1, hi = -1, hi_deg = -1;
        for (int v : open) {
            int dv = (g_.neighbors(v) & open).size();
            if (dv < lo_deg) {
                lo_deg = dv;
                lo = v;
            }
            if (dv > hi_deg) {
                hi_deg = dv;
                hi = v;
            }
        }
        // a vertex of degree <= 1 lies in some maximum independent set
        const int v = lo_deg <= 1 ? lo : hi;
        bit_set<W> with = cur;
        with.insert(v);
        rec(open - g_.closed_neighbors(v), with);
        if (lo_deg > 1) {
            bit_set<W> without = open;
            without.erase(v);
            rec(without, cur);
        }
    }

    const basic_graph<W>& g_;
    bit_set<W> best_;
};

} // namespace detail

template <std::size_t W>
bit_set<W> minimum_dominating_set(const basic_graph<W>& g)
{
    detail::require_nonempty(g);
    return detail::min_dominating_search<W>(g).run();
}

// γ(G)
template <std::size_t W>
int domination_number(const basic_graph<W>& g)
{
    return minimum_dominating_set(g).size();
}

template <std::size_t W>
bit_set<W> maximum_independent_set(const basic_graph<W>& g)
{
    detail::require_nonempty(g);
    return detail::max_independent_search<W>(g).run();
}

// α(G)
template <std::size_t W>
int independence_number(const basic_graph<W>& g)
{
    return maximum_independent_set(g).size();
}

namespace detail {

template <class Item, class ForEach>
property_verdict<Item> same_size_verdict(ForEach&& for_each, const budget& b)
{
    property_verdict<Item> out;
    enum_status st = for_each(
        [&](const Item& x) {
            if (out.witnesses.empty()) {
                out.witnesses.push_back(x);
                return true;
            }
            if (item_size(x) != item_size(out.witnesses.front())) {
                out.witnesses.push_back(x);
                return false;
            }
            return true;
        },
        b);
    if (out.witnesses.size() == 2) {
        out.state = verdict_state::fails;
    } else if (st == enum_status::complete) {
        out.state = verdict_state::holds;
        out.common_size = item_size(out.witnesses.front());
    }
    return out;
}

} // namespace detail

// Holds iff every minimal dominating set has the same size. Certificates are
// the lexicographically first minimal dominating set and, on failure, the
// first one of a different size.
template <std::size_t W>
property_verdict<bit_set<W>> is_well_dominated(const basic_graph<W>& g, const budget& b = {})
{
    return detail::same_size_verdict<bit_set<W>>(
        [&](auto&& visit, const budget& bb) { return for_each_minimal_dominating_set(g, visit, bb); },
        b);
}

template <std::size_t W>
property_verdict<bit_set<W>> is_well_covered(const basic_graph<W>& g, const budget& b = {})
{
    return detail::same_size_verdict<bit_set<W>>(
        [&](auto&& visit, const budget& bb) { return for_each_maximal_independent_set(g, visit, bb); },
        b);
}

// Centres u_1 < ... < u_t whose closed neighbourhoods are cliques
// partitioning V(G).
struct clique_partition_certificate {
    std::vector<int> centers;

    int t() const { return static_cast<int>(centers.size()); }
};

// Exact-cover search over simplicial vertices, include-first in index order;
// the first cover found has the lexicographically least centre list.
template <std::size_t W>
std::optional<clique_partition_certificate> trivially_well_dominated_certificate(const basic_graph<W>& g)
{
    detail::require_nonempty(g);
    const int n = g.order();
    std::vector<int> simplicial;
    std::vector<bit_set<W>> block(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        block[v] = g.closed_neighbors(v);
        if (is_clique(g, block[v]))
            simplicial.push_back(v);
    }
    // settle[k]: vertices only coverable by simplicial[0..k]
    std::vector<bit_set<W>> settle(simplicial.size());
    bit_set<W> coverable;
    for (int w = 0; w < n; ++w) {
        int last = -1;
        for (std::size_t k = 0; k < simplicial.size(); ++k)
            if (block[simplicial[k]].contains(w))
                last = static_cast<int>(k);
        if (last < 0)
            return std::nullopt;
        settle[last].insert(w);
    }

    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t k, const bit_set<W>& covered) -> bool {
        if (k == simplicial.size())
            return covered == g.vertices();
        const bit_set<W>& b = block[simplicial[k]];
        if (!b.intersects(covered)) {
            bit_set<W> c2 = covered | b;
            if (settle[k].is_subset_of(c2)) {
                chosen.push_back(simplicial[k]);
                if (self(self, k + 1, c2))
                    return true;
                chosen.pop_back();
            }
        }
        return settle[k].is_subset_of(covered) && self(self, k + 1, covered);
    };
    if (!rec(rec, 0, bit_set<W>{}))
        return std::nullopt;
    return clique_partition_certificate{chosen};
}

template <std::size_t W>
bool validate(const basic_graph<W>& g, const clique_partition_certificate& c)
{
    return checks::is_clique_partition(g, c.centers);
}

// For a minimal dominating set D of G ⊠ H and a clique-partition
// certificate u_1..u_t of G, returns D_i = {v : (u, v) ∈ D, u ∈ N_G[u_i]}.
// Each D_i must be a minimal dominating set of H and |D| = Σ|D_i| = t·γ(H);
// anything else throws theorem_violation.
template <std::size_t W>
std::vector<vertex_set> theorem1_projection(const product_graph<W>& p, const bit_set<W>& d,
                                            const clique_partition_certificate& cert)
{
    const graph& g = p.g_factor();
    const graph& h = p.h_factor();
    if (!validate(g, cert))
        throw domain_error("certificate is not a clique partition of the G factor");
    if (!checks::is_minimal_dominating(p.graph(), d))
        throw domain_error("D is not a minimal dominating set of the product");

    std::vector<vertex_set> parts;
    int total = 0;
    for (int center : cert.centers) {
        vertex_set block = g.closed_neighbors(center);
        vertex_set di;
        for (int x : d) {
            auto [u, v] = p.coords(x);
            if (block.contains(u))
                di.insert(v);
        }
        if (!checks::is_minimal_dominating(h, di))
            throw theorem_violation("projection D_i onto H is not a minimal dominating set");
        total += di.size();
        parts.push_back(di);
    }
    if (total != d.size())
        throw theorem_violation("|D| != sum of |D_i|");
    if (total != cert.t() * domination_number(h))
        throw theorem_violation("|D| != t * gamma(H)");
    return parts;
}

} // namespace strongprod

#endif // STRONGPROD_DOMINATION_HPP
