#include <gtest/gtest.h>

#include <strongprod/canonical.hpp>
#include <strongprod/catalog.hpp>
#include <strongprod/corpus.hpp>
#include <strongprod/matching.hpp>
#include <strongprod/product.hpp>

#include "oracle.hpp"

using namespace strongprod;

TEST(StrongProduct, SmallExamples)
{
    EXPECT_EQ(strong_product(named::complete(2), named::complete(2)).graph(), named::complete(4));
    EXPECT_EQ(strong_product(named::complete(2), named::complete(3)).graph(), named::complete(6));
    const auto c4c4 = strong_product(named::cycle(4), named::cycle(4));
    EXPECT_EQ(c4c4.graph().order(), 16);
    EXPECT_EQ(c4c4.graph().size(), 64);
    for (int v = 0; v < 16; ++v)
        EXPECT_EQ(c4c4.graph().degree(v), 8); // 2 + 2 + 2·2
}

TEST(StrongProduct, IndexLayoutAndLabels)
{
    const auto p = strong_product(named::path(3), named::complete(2));
    EXPECT_EQ(p.index(2, 1), 5);
    EXPECT_EQ(p.coords(5), std::make_pair(2, 1));
    EXPECT_EQ(p.graph().labels()[3], "1,1");
    EXPECT_EQ(p.g_order(), 3);
    EXPECT_EQ(p.h_order(), 2);
}

TEST(StrongProduct, MatchesDefinitionOnAllSmallPairs)
{
    std::vector<graph> gs;
    for (int n = 1; n <= 4; ++n)
        for (const graph& g : enumerate_connected_graphs(n))
            gs.push_back(g);
    gs.push_back(named::empty(3));
    for (const graph& g : gs)
        for (const graph& h : gs) {
            const auto p = strong_product(g, h);
            EXPECT_EQ(oracle::of(p.graph()).a, oracle::strong_product(oracle::of(g), oracle::of(h)).a);
        }
}

TEST(StrongProduct, CapacityLimits)
{
    EXPECT_THROW(strong_product(named::complete(9), named::complete(8)), capacity_error);
    EXPECT_THROW(strong_product(named::complete(4), named::complete(4), 15), capacity_error);
    EXPECT_NO_THROW(strong_product<2>(named::complete(9), named::complete(8)));
    EXPECT_THROW(strong_product(graph(0, {}), named::complete(2)), domain_error);
}

TEST(StrongProduct, CommutesUpToIsomorphism)
{
    const auto gs = enumerate_connected_graphs(1, 4);
    for (const graph& g : gs)
        for (const graph& h : gs)
            EXPECT_EQ(canonical_key(strong_product(g, h).graph()), canonical_key(strong_product(h, g).graph()));
}

TEST(StrongProduct, PerfectMatchingInheritedFromEitherFactor)
{
    const auto gs = enumerate_connected_graphs(1, 4);
    for (const graph& g : gs)
        for (const graph& h : gs)
            if (has_perfect_matching(g) || has_perfect_matching(h)) {
                EXPECT_TRUE(has_perfect_matching(strong_product(g, h).graph()));
            }
}

TEST(StrongProduct, NontrivialConnectedFactorsGiveTwoConnectedProducts)
{
    const auto gs = enumerate_connected_graphs(2, 5);
    for (const graph& g : gs)
        for (const graph& h : gs) {
            if (g.order() * h.order() > 30)
                continue;
            const auto p = strong_product(g, h);
            EXPECT_TRUE(is_connected(p.graph()));
            EXPECT_TRUE(is_k_connected(p.graph(), 2));
        }
}

TEST(Project, CollapsesCoordinates)
{
    const auto p = strong_product(named::path(3), named::cycle(4));
    const vertex_set same_u{p.index(1, 0), p.index(1, 2)};
    EXPECT_EQ(project(p, factor::h, same_u), (vertex_set{0, 2}));
    EXPECT_EQ(project(p, factor::g, same_u), vertex_set{1});
    const vertex_set same_v{p.index(0, 3), p.index(2, 3)};
    EXPECT_EQ(project(p, factor::h, same_v), vertex_set{3});
    EXPECT_EQ(project(p, factor::g, p.graph().vertices()), vertex_set::prefix(3));
}
