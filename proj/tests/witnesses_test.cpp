#include <gtest/gtest.h>

#include <random>
#include <set>

#include <strongprod/catalog.hpp>
#include <strongprod/checks.hpp>
#include <strongprod/corpus.hpp>
#include <strongprod/graph6.hpp>
#include <strongprod/witnesses.hpp>

#include "oracle.hpp"

using namespace strongprod;

namespace {

std::set<int> eds_sizes(const witness_report& r)
{
    std::set<int> out;
    for (const auto& f : r.eds)
        out.insert(static_cast<int>(f.size()));
    return out;
}

// The residual claims, re-checked by brute force on the residual graph.
void expect_residual_sizes_by_oracle(const witness_report& r)
{
    ASSERT_TRUE(r.residual.has_value());
    const auto x = oracle::of(*r.residual);
    ASSERT_LE(x.edges.size(), 22u);
    const auto all = oracle::sizes(oracle::minimal_edge_dominating_sets(x));
    for (int s : eds_sizes(r))
        EXPECT_TRUE(all.count(s)) << s;
    EXPECT_GE(all.size(), 2u);
}

bool qualifies_for_triple(const graph& g)
{
    const auto x = oracle::of(g);
    return g.order() % 2 == 1 && oracle::connected(x) && 2 * oracle::matching_number(x) == g.order() - 1
           && oracle::independence_number(x) > 2 && oracle::maximal_matching_sizes(x).size() == 1;
}

void expect_good_triple(const graph& g, const vertex_set& s)
{
    const auto x = oracle::of(g);
    ASSERT_EQ(s.size(), 3);
    EXPECT_TRUE(oracle::independent(x, oracle::mask_of(s)));
    const oracle::mask d = oracle::exposed_by_some_maximum_matching(x);
    EXPECT_EQ(oracle::mask_of(s) & ~d, 0u);
    for (int v : s) {
        const graph rest = remove_vertex(g, v);
        EXPECT_EQ(2 * oracle::matching_number(oracle::of(rest)), g.order() - 1);
    }
}

} // namespace

TEST(MupStarStar, ResidualHasTwoEdgeDominatingSizes)
{
    for (auto [n, t] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2}}) {
        const auto r = mup_star_star(n, t);
        EXPECT_TRUE(r.verified) << n << "," << t << ": " << (r.failures.empty() ? "" : r.failures.front());
        EXPECT_TRUE(checks::is_matching(r.host, r.matching));
        EXPECT_EQ(static_cast<int>(r.matching.size()), t + std::max(0, n - 2));
        EXPECT_EQ(eds_sizes(r), (std::set<int>{1, 2}));
    }
    expect_residual_sizes_by_oracle(mup_star_star(2, 2));
    expect_residual_sizes_by_oracle(mup_star_star(3, 2));
    EXPECT_THROW(mup_star_star(1, 3), domain_error);
}

TEST(MupStarTriangle, ResidualHasSizesTwoAndNPlusOne)
{
    for (int n = 2; n <= 5; ++n) {
        const auto r = mup_star_triangle(n);
        EXPECT_TRUE(r.verified) << n;
        EXPECT_EQ(eds_sizes(r), (std::set<int>{2, n + 1}));
        EXPECT_EQ(r.residual->order(), 3 * (n + 1) - 2 * n);
    }
    expect_residual_sizes_by_oracle(mup_star_triangle(2));
    expect_residual_sizes_by_oracle(mup_star_triangle(3));
    EXPECT_THROW(mup_star_triangle(1), domain_error);
}

TEST(MupWitnesses, TamperedClaimIsRejected)
{
    witness_report r;
    r.host = named::path(4);
    r.matching = {};
    detail::check_residual_eds(r, {{edge(0, 1)}, {edge(1, 2)}});
    r.seal();
    EXPECT_FALSE(r.verified);
}

TEST(P3Witness, Examples)
{
    const auto k3 = p3_witness(named::complete(3));
    EXPECT_TRUE(k3.verified);
    EXPECT_EQ(k3.uncovered.size(), 1);
    EXPECT_FALSE(k3.implies_not_equimatchable);

    for (const graph& g : {named::path(3), named::cycle(5)}) {
        const auto r = p3_witness(g);
        EXPECT_TRUE(r.verified) << to_graph6(g);
        EXPECT_EQ(r.uncovered.size(), 3);
        EXPECT_TRUE(r.implies_not_equimatchable);
    }
    EXPECT_THROW(p3_witness(named::cycle(4)), domain_error);
    EXPECT_THROW(p3_witness(named::complete(1)), domain_error);
}

TEST(P3Witness, UncoveredCountOnOddGraphs)
{
    for (int n = 3; n <= 7; n += 2)
        for (const graph& g : enumerate_connected_graphs(n)) {
            const auto r = p3_witness(g);
            ASSERT_TRUE(r.verified) << to_graph6(g);
            const int alpha = oracle::independence_number(oracle::of(g));
            const vertex_set indep = choose_maximum_independent_set(g);
            const int mg = static_cast<int>(choose_maximal_matching(g, indep).size());
            EXPECT_EQ(r.uncovered.size(), alpha + (n - alpha - 2 * mg));
            EXPECT_EQ(r.implies_not_equimatchable, r.uncovered.size() > 1);
        }
}

TEST(P3Witness, RejectsBadChoices)
{
    const graph c5 = named::cycle(5);
    EXPECT_THROW(p3_witness(c5, vertex_set{0}, {}), domain_error);          // not maximum
    EXPECT_THROW(p3_witness(c5, vertex_set{0, 1}, {}), domain_error);       // not independent
    EXPECT_THROW(p3_witness(c5, vertex_set{0, 2}, {}), domain_error);       // Mg not maximal
    EXPECT_THROW(p3_witness(c5, vertex_set{0, 2}, {edge(0, 1)}), domain_error);
    EXPECT_TRUE(p3_witness(c5, vertex_set{0, 2}, {edge(3, 4)}).verified);
}

TEST(K3Witness, C7LeavesExactlyThreeUncovered)
{
    const graph c7 = named::cycle(7);
    const auto s = find_independent_triple(c7);
    const auto r = k3_witness(c7, s.to_vector());
    EXPECT_TRUE(r.verified);
    EXPECT_EQ(r.uncovered.size(), 3);
    EXPECT_TRUE(r.implies_not_equimatchable);
    EXPECT_EQ(r.host.order(), 21);
    EXPECT_EQ(r.matching.size(), 9u);
}

TEST(K3Witness, RejectsBadInputs)
{
    EXPECT_THROW(k3_witness(named::cycle(7), {0, 1, 3}), domain_error); // 0 ~ 1
    EXPECT_THROW(k3_witness(named::cycle(7), {0, 2}), domain_error);
    EXPECT_THROW(k3_witness(named::cycle(6), {0, 2, 4}), domain_error);
    EXPECT_THROW(k3_witness(named::path(3), {0, 2, 1}), domain_error);
}

TEST(ProductMatching, UncoveredIsProductOfExposedSets)
{
    EXPECT_EQ(product_matching(named::path(3), named::path(3)).uncovered.size(), 1);
    EXPECT_EQ(product_matching(named::path(5), named::path(3)).uncovered.size(), 1);
    EXPECT_EQ(product_matching(named::star(3), named::path(3)).uncovered.size(), 2);
    EXPECT_EQ(product_matching(named::cycle(4), named::path(3)).uncovered.size(), 0);

    std::mt19937 rng(11);
    const auto pool = enumerate_connected_graphs(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        const graph& g = pool.graphs[rng() % pool.size()];
        const graph& h = pool.graphs[rng() % pool.size()];
        const auto r = product_matching(g, h);
        EXPECT_TRUE(r.verified);
        EXPECT_EQ(r.uncovered.size(), (g.order() - 2 * matching_number(g)) * (h.order() - 2 * matching_number(h)));
        EXPECT_TRUE(checks::is_maximal_matching(r.host, r.matching));
    }
}

TEST(ProductMatching, RejectsNonMaximumMatchings)
{
    EXPECT_THROW(product_matching(named::path(4), named::path(3), {edge(1, 2)}, {edge(0, 1)}), domain_error);
    EXPECT_THROW(product_matching(named::path(4), named::path(3), {edge(0, 1), edge(2, 3)}, {edge(0, 2)}),
                 domain_error);
}

TEST(IndependentTriple, Examples)
{
    expect_good_triple(named::cycle(7), find_independent_triple(named::cycle(7)));
    expect_good_triple(named::complete_bipartite(3, 4), find_independent_triple(named::complete_bipartite(3, 4)));
    EXPECT_THROW(find_independent_triple(named::cycle(5)), domain_error); // alpha = 2
    EXPECT_THROW(find_independent_triple(named::cycle(6)), domain_error);
    EXPECT_THROW(find_independent_triple(named::star(4)), domain_error);  // no near-perfect matching
}

TEST(IndependentTriple, NineVertexExamples)
{
    for (const char* g6 : {"HvZs~jv", "HeuyxF[", "H}?~fKx"}) {
        const graph g = from_graph6(g6);
        ASSERT_TRUE(qualifies_for_triple(g)) << g6;
        expect_good_triple(g, find_independent_triple(g));
    }
}

TEST(IndependentTriple, EveryQualifyingGraphUpToSeven)
{
    int checked = 0;
    for (int n = 1; n <= 7; n += 2)
        for (const graph& g : enumerate_connected_graphs(n)) {
            if (!qualifies_for_triple(g))
                continue;
            ++checked;
            expect_good_triple(g, find_independent_triple(g));
            EXPECT_TRUE(k3_witness(g, find_independent_triple(g).to_vector()).verified);
        }
    EXPECT_GT(checked, 0);
}
