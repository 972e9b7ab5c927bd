#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include <strongprod/catalog.hpp>
#include <strongprod/checks.hpp>
#include <strongprod/corpus.hpp>
#include <strongprod/matching.hpp>
#include <strongprod/product.hpp>

#include "oracle.hpp"

using namespace strongprod;

namespace {

oracle::mask edge_mask(const oracle::adjacency& x, const edge_set& f)
{
    oracle::mask m = 0;
    for (const edge& e : f) {
        const auto it = std::find(x.edges.begin(), x.edges.end(), std::make_pair(e.u, e.v));
        EXPECT_NE(it, x.edges.end());
        m |= oracle::mask{1} << (it - x.edges.begin());
    }
    return m;
}

std::vector<oracle::mask> edge_masks(const oracle::adjacency& x, const std::vector<edge_set>& sets)
{
    std::vector<oracle::mask> out;
    for (const auto& f : sets)
        out.push_back(edge_mask(x, f));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<graph> with_edges(int max_n, int max_edges)
{
    std::vector<graph> out;
    for (int n = 2; n <= max_n; ++n)
        for (const graph& g : enumerate_connected_graphs(n))
            if (g.size() <= max_edges)
                out.push_back(g);
    out.push_back(graph(6, {{0, 1}, {2, 3}, {3, 4}}));
    return out;
}

std::set<int> sizes_of(const std::vector<edge_set>& sets)
{
    std::set<int> out;
    for (const auto& f : sets)
        out.insert(static_cast<int>(f.size()));
    return out;
}

} // namespace

TEST(MatchingNumber, Examples)
{
    EXPECT_EQ(matching_number(named::complete(9)), 4);
    EXPECT_EQ(matching_number(named::path(3)), 1);
    EXPECT_EQ(matching_number(named::bull()), 2);
    EXPECT_EQ(matching_number(named::complete_bipartite(2, 3)), 2);
    EXPECT_EQ(matching_number(named::empty(4)), 0);
    EXPECT_EQ(matching_number(strong_product(named::cycle(4), named::cycle(4)).graph()), 8);
}

TEST(MatchingNumber, AgreesWithExhaustiveSearch)
{
    for (int n = 1; n <= 7; ++n)
        for (const graph& g : enumerate_connected_graphs(n)) {
            const edge_set m = maximum_matching(g);
            EXPECT_TRUE(checks::is_matching(g, m));
            EXPECT_EQ(static_cast<int>(m.size()), oracle::matching_number(oracle::of(g))) << to_graph6(g);
        }
}

TEST(MatchingNumber, RandomGraphsUpToFourteenVertices)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 8 + static_cast<int>(rng() % 7);
        std::bernoulli_distribution coin(0.15 + 0.05 * (trial % 6));
        std::vector<edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng))
                    es.emplace_back(u, v);
        const graph g(n, es);
        EXPECT_EQ(matching_number(g), oracle::matching_number(oracle::of(g)));
    }
}

TEST(MatchingPredicates, Examples)
{
    EXPECT_TRUE(has_perfect_matching(named::cycle(4)));
    EXPECT_FALSE(has_perfect_matching(named::star(3)));
    EXPECT_TRUE(has_near_perfect_matching(named::cycle(5)));
    EXPECT_FALSE(has_near_perfect_matching(named::star(4)));
    EXPECT_FALSE(has_near_perfect_matching(named::cycle(4)));
    EXPECT_TRUE(is_factor_critical(named::cycle(5)));
    EXPECT_TRUE(is_factor_critical(named::complete(1)));
    EXPECT_FALSE(is_factor_critical(named::path(3)));
    EXPECT_FALSE(is_factor_critical(named::cycle(4)));
}

TEST(MatchingPredicates, FactorCriticalMatchesExposureByBruteForce)
{
    for (int n = 1; n <= 7; ++n)
        for (const graph& g : enumerate_connected_graphs(n)) {
            const auto x = oracle::of(g);
            const bool every_vertex_exposed = oracle::exposed_by_some_maximum_matching(x) == (oracle::mask{1} << n) - 1;
            EXPECT_EQ(is_factor_critical(g), n % 2 == 1 && every_vertex_exposed
                                                 && 2 * oracle::matching_number(x) == n - 1)
                << to_graph6(g);
        }
}

TEST(MaximalMatchings, Examples)
{
    EXPECT_EQ(sizes_of(enumerate_maximal_matchings(named::bull()).items), (std::set<int>{1, 2}));
    EXPECT_EQ(enumerate_maximal_matchings(named::complete(4)).items.size(), 3u);
    const auto k23 = enumerate_maximal_matchings(named::complete_bipartite(2, 3));
    EXPECT_EQ(k23.items.size(), 6u);
    EXPECT_EQ(sizes_of(k23.items), std::set<int>{2});
    // edgeless graphs have exactly the empty maximal matching
    const auto e3 = enumerate_maximal_matchings(named::empty(3));
    ASSERT_EQ(e3.items.size(), 1u);
    EXPECT_TRUE(e3.items[0].empty());
}

TEST(MaximalMatchings, AgreeWithBruteForce)
{
    for (const graph& g : with_edges(7, 16)) {
        const auto x = oracle::of(g);
        const auto got = enumerate_maximal_matchings(g);
        ASSERT_EQ(got.status, enum_status::complete);
        EXPECT_EQ(edge_masks(x, got.items), oracle::maximal_matchings(x)) << to_graph6(g);
    }
}

TEST(MaximalMatchings, CountOnK16)
{
    // maximal matchings of K_2k are its perfect matchings: (2k-1)!! of them
    std::size_t count = 0;
    const auto st = for_each_maximal_matching(named::complete(16), [&](const edge_set& m) {
        EXPECT_EQ(m.size(), 8u);
        ++count;
        return true;
    });
    EXPECT_EQ(st, enum_status::complete);
    EXPECT_EQ(count, 2027025u);
}

TEST(Equimatchable, Examples)
{
    EXPECT_TRUE(is_equimatchable(named::complete_bipartite(2, 3)).holds());
    for (int n = 1; n <= 8; ++n)
        EXPECT_TRUE(is_equimatchable(named::complete(n)).holds());
    EXPECT_TRUE(is_equimatchable(named::cycle(5)).holds());

    const auto bull = is_equimatchable(named::bull());
    ASSERT_TRUE(bull.fails());
    ASSERT_EQ(bull.witnesses.size(), 2u);
    EXPECT_EQ(bull.witnesses[0].size(), 2u);
    EXPECT_EQ(bull.witnesses[1].size(), 1u);
    EXPECT_TRUE(checks::is_maximal_matching(named::bull(), bull.witnesses[1]));
}

TEST(Equimatchable, VerdictMatchesBruteForce)
{
    for (const graph& g : with_edges(7, 16)) {
        const auto x = oracle::of(g);
        const auto sizes = oracle::sizes(oracle::maximal_matchings(x));
        EXPECT_EQ(sizes, oracle::maximal_matching_sizes(x));
        EXPECT_EQ(is_equimatchable(g).holds(), sizes.size() == 1) << to_graph6(g);
    }
}

TEST(MinimalEdgeDominatingSets, AgreeWithBruteForce)
{
    for (const graph& g : with_edges(7, 12)) {
        const auto x = oracle::of(g);
        const auto got = enumerate_minimal_edge_dominating_sets(g);
        ASSERT_EQ(got.status, enum_status::complete);
        for (const auto& f : got.items)
            EXPECT_TRUE(std::is_sorted(f.begin(), f.end()));
        EXPECT_EQ(edge_masks(x, got.items), oracle::minimal_edge_dominating_sets(x)) << to_graph6(g);
    }
}

TEST(MinimalEdgeDominatingSets, AreMinimalDominatingSetsOfTheLineGraph)
{
    for (const graph& g : with_edges(6, 10)) {
        const auto x = oracle::of(g);
        const auto eds = oracle::minimal_edge_dominating_sets(x);
        // edge i of G is vertex i of L(G), so the masks coincide
        EXPECT_EQ(eds, oracle::minimal_dominating_sets(oracle::line_graph(x)));
    }
}

TEST(MinimalEdgeDominatingSets, SmallCasesAndErrors)
{
    const auto k2 = enumerate_minimal_edge_dominating_sets(named::complete(2));
    ASSERT_EQ(k2.items.size(), 1u);
    EXPECT_EQ(k2.items[0], (edge_set{edge(0, 1)}));
    EXPECT_THROW(enumerate_minimal_edge_dominating_sets(named::empty(3)), domain_error);
    EXPECT_THROW(is_well_edge_dominated(named::complete(1)), domain_error);
}

TEST(MinimalEdgeDominatingSets, K9HasOneOfSizeSeven)
{
    // star at vertex 0 towards 1..7: dropping 0-i leaves the edge i-8 bare
    edge_set f;
    for (int v = 1; v <= 7; ++v)
        f.emplace_back(0, v);
    EXPECT_TRUE(checks::is_minimal_edge_dominating(named::complete(9), f));

    bool found = false;
    for_each_minimal_edge_dominating_set(named::complete(9), [&](const edge_set& s) {
        found = s.size() == 7;
        return !found;
    });
    EXPECT_TRUE(found);
}

TEST(WellEdgeDominated, Examples)
{
    EXPECT_TRUE(is_well_edge_dominated(named::complete(4)).holds());
    EXPECT_TRUE(is_well_edge_dominated(named::complete(2)).holds());

    const auto k9 = is_well_edge_dominated(named::complete(9));
    ASSERT_TRUE(k9.fails());
    ASSERT_EQ(k9.witnesses.size(), 2u);
    EXPECT_EQ(k9.witnesses[0].size(), 4u);
    EXPECT_NE(k9.witnesses[1].size(), 4u);
    for (const auto& f : k9.witnesses)
        EXPECT_TRUE(checks::is_minimal_edge_dominating(named::complete(9), f));

    EXPECT_TRUE(is_well_edge_dominated(named::complete_bipartite(2, 3)).fails());
}

TEST(WellEdgeDominated, VerdictMatchesBruteForce)
{
    for (const graph& g : with_edges(7, 12)) {
        const auto x = oracle::of(g);
        const bool expected = oracle::sizes(oracle::minimal_edge_dominating_sets(x)).size() == 1;
        EXPECT_EQ(is_well_edge_dominated(g).holds(), expected) << to_graph6(g);
    }
}

TEST(WellEdgeDominated, ImpliesEquimatchable)
{
    for (const graph& g : with_edges(7, 21))
        if (is_well_edge_dominated(g).holds()) {
            EXPECT_TRUE(is_equimatchable(g).holds()) << to_graph6(g);
        }
}

TEST(WellEdgeDominated, DisproveOnlyNeverClaimsTheProperty)
{
    for (const graph& g : with_edges(6, 15)) {
        const auto full = is_well_edge_dominated(g);
        const auto quick = is_well_edge_dominated(g, wed_mode::disprove_only);
        EXPECT_FALSE(quick.holds());
        EXPECT_EQ(quick.fails(), full.fails());
    }
}

TEST(WellEdgeDominated, BudgetExhaustionIsInconclusive)
{
    const auto v = is_well_edge_dominated(named::complete(8), wed_mode::full, budget::results(1));
    EXPECT_TRUE(v.inconclusive() || v.fails());
    EXPECT_FALSE(v.holds());
}
