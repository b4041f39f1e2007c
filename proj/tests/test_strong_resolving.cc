/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/error.hh>
#include <strongdim/generators.hh>
#include <strongdim/isomorphism.hh>
#include <strongdim/metrics.hh>
#include <strongdim/products.hh>
#include <strongdim/strong_resolving.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace strongdim;

namespace
{
    auto cliques(std::vector<int> sizes) -> Graph
    {
        std::vector<Graph> parts;
        for (auto s : sizes)
            parts.push_back(generate(family::Complete{ s }));
        return disjoint_union(parts);
    }
}

TEST(StrongResolving, MatchesDefinitionOnRandomGraphs)
{
    std::mt19937_64 rng(31);
    for (int i = 0 ; i < 150 ; ++i) {
        auto g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 12), 0.35, rng);
        EXPECT_EQ(strong_resolving_graph(g).sr, oracle::strong_resolving_graph(g));
    }
}

TEST(StrongResolving, KnownShapes)
{
    // paths: only the two ends
    auto p4 = strong_resolving_graph(generate(family::Path{ 4 })).sr;
    EXPECT_EQ(p4.edges(), (std::vector<Edge>{ { 0, 3 } }));
    // even cycles: antipodal matching
    EXPECT_TRUE(graphs_isomorphic(strong_resolving_graph(generate(family::Cycle{ 8 })).sr, cliques({ 2, 2, 2, 2 })));
    // odd cycles: each vertex with its two antipodes, another odd cycle
    EXPECT_TRUE(graphs_isomorphic(strong_resolving_graph(generate(family::Cycle{ 7 })).sr, generate(family::Cycle{ 7 })));
    EXPECT_EQ(strong_resolving_graph(generate(family::Complete{ 5 })).sr, generate(family::Complete{ 5 }));
    // trees: leaves form a clique
    EXPECT_TRUE(graphs_isomorphic(strong_resolving_graph(generate(family::Star{ 5 })).sr, cliques({ 4, 1 })));
    EXPECT_TRUE(graphs_isomorphic(strong_resolving_graph(generate(family::CompleteMultipartite{ { 2, 3 } })).sr,
                cliques({ 2, 3 })));
}

TEST(StrongResolving, GridsPairOnlyOppositeCorners)
{
    for (auto [rows, cols] : std::vector<std::pair<int, int>>{ { 2, 2 }, { 2, 3 }, { 3, 3 }, { 3, 5 }, { 4, 4 } }) {
        auto g = generate(family::Grid{ rows, cols });
        auto sr = strong_resolving_graph(g).sr;
        EXPECT_EQ(sr, oracle::strong_resolving_graph(g));
        int last = rows * cols - 1;
        EXPECT_EQ(sr.edges(), (std::vector<Edge>{ { 0, last }, { cols - 1, last - cols + 1 } }))
            << rows << "x" << cols;
    }
}

TEST(StrongResolving, BoundaryIsNonIsolatedVertices)
{
    auto g = generate(family::Star{ 6 });
    EXPECT_EQ(boundary(g), VertexSet(6, { 1, 2, 3, 4, 5 }));
    EXPECT_EQ(boundary(generate(family::Cycle{ 5 })).count(), 5);
}

TEST(StrongResolving, RejectsTrivialAndDisconnected)
{
    EXPECT_THROW(strong_resolving_graph(Graph(1)), Error);
    try {
        strong_resolving_graph(Graph(2));
        ADD_FAILURE();
    }
    catch (const Error & e) {
        EXPECT_EQ(e.kind(), ErrorKind::disconnected);
    }
}

TEST(StrongResolving, PredictedEdgesEqualDirectComputation)
{
    std::mt19937_64 rng(41);
    for (int i = 0 ; i < 120 ; ++i) {
        auto g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
        auto h = oracle::random_connected_graph(2 + static_cast<int>(rng() % 6), 0.45, rng);
        auto predicted = predicted_mmd_edges(g, h);
        auto direct = oracle::strong_resolving_graph(product(ProductKind::strong, g, h));
        EXPECT_EQ(predicted.as_graph(), direct);

        auto counts = predicted.condition_counts();
        int total = 0;
        for (auto c : counts)
            total += c;
        EXPECT_EQ(total, direct.size());
    }
}

TEST(StrongResolving, ConditionTagsOnSmallProduct)
{
    // K2 ⊠ P3: the end pairs of P3 with equal or differing first coordinates
    auto predicted = predicted_mmd_edges(generate(family::Complete{ 2 }), generate(family::Path{ 3 }));
    ProductSpec spec{ ProductKind::strong, 2, 3 };
    bool saw_both = false;
    for (auto & e : predicted.edges) {
        auto [a, b] = spec.decode(e.a);
        auto [c, d] = spec.decode(e.b);
        if (a != c && b != d && std::max(b, d) == 2 && std::min(b, d) == 0) {
            EXPECT_EQ(e.condition, MmdCondition::both_mmd);
            saw_both = true;
        }
    }
    EXPECT_TRUE(saw_both);
    EXPECT_EQ(mmd_condition_tag(MmdCondition::h_mmd_h_farther), "v");
}
