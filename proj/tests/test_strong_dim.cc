/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/error.hh>
#include <strongdim/formulas.hh>
#include <strongdim/generators.hh>
#include <strongdim/metrics.hh>
#include <strongdim/products.hh>
#include <strongdim/strong_dim.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <random>

using namespace strongdim;

TEST(StrongDimension, KnownFamilies)
{
    for (int n = 2 ; n <= 8 ; ++n)
        EXPECT_EQ(strong_metric_dimension(generate(family::Complete{ n })).dim, n - 1);
    for (int r = 1 ; r <= 6 ; ++r)
        EXPECT_EQ(strong_metric_dimension(generate(family::Cycle{ 2 * r + 1 })).dim, r + 1);
    for (int r = 2 ; r <= 6 ; ++r)
        EXPECT_EQ(strong_metric_dimension(generate(family::Cycle{ 2 * r })).dim, r);
    for (int n = 2 ; n <= 8 ; ++n)
        EXPECT_EQ(strong_metric_dimension(generate(family::Path{ n })).dim, 1);
    EXPECT_EQ(strong_metric_dimension(generate(family::Star{ 7 })).dim, 5);
    EXPECT_EQ(strong_metric_dimension(generate(family::Grid{ 3, 4 })).dim, 2);
}

TEST(StrongDimension, CoverRouteMatchesDefinition)
{
    std::mt19937_64 rng(201);
    for (int i = 0 ; i < 120 ; ++i) {
        auto g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 9), 0.4, rng);
        auto r = strong_metric_dimension(g);
        EXPECT_EQ(r.dim, oracle::strong_metric_dimension(g));
        EXPECT_EQ(r.basis.count(), r.dim);
        EXPECT_TRUE(is_strong_generator(g, r.basis));
        EXPECT_EQ(brute_force_dimension(g).dim, r.dim);
    }
}

TEST(StrongDimension, GeneratorCheckMatchesDefinition)
{
    std::mt19937_64 rng(203);
    for (int i = 0 ; i < 60 ; ++i) {
        auto g = oracle::random_connected_graph(2 + static_cast<int>(rng() % 7), 0.4, rng);
        auto d = oracle::distances(g);
        std::uint64_t mask = rng() & ((std::uint64_t{1} << g.order()) - 1);
        VertexSet s(g.order());
        for (int v = 0 ; v < g.order() ; ++v)
            if (mask >> v & 1)
                s.insert(v);
        bool expected = true;
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v) {
                bool resolved = false;
                for (auto w : s.members())
                    resolved = resolved || oracle::strongly_resolves(d, w, u, v);
                expected = expected && resolved;
            }
        EXPECT_EQ(is_strong_generator(g, s), expected);
    }
}

TEST(StrongDimension, SmallProducts)
{
    auto k2 = generate(family::Complete{ 2 });
    EXPECT_EQ(strong_metric_dimension(product(ProductKind::strong, k2, generate(family::Path{ 3 }))).dim, 4);
    EXPECT_EQ(strong_metric_dimension(product(ProductKind::strong, k2, k2)).dim, 3);
    auto c3 = generate(family::Cycle{ 3 });
    EXPECT_EQ(strong_metric_dimension(product(ProductKind::strong, c3, generate(family::Cycle{ 5 }))).dim, 13);
    EXPECT_EQ(brute_force_dimension(product(ProductKind::strong, c3, c3)).dim, 8);
}

TEST(StrongDimension, Errors)
{
    EXPECT_THROW(strong_metric_dimension(Graph(4)), Error);
    EXPECT_THROW(strong_metric_dimension(Graph(1)), Error);
    EXPECT_THROW(brute_force_dimension(generate(family::Path{ 16 })), Error);
    auto dm = all_pairs_distances(generate(family::Path{ 3 }));
    EXPECT_THROW(strongly_resolves(dm, 0, 1, 1), Error);
}

TEST(Formulas, LiteralValues)
{
    using namespace formula;
    EXPECT_EQ(general_lower(5, 7, 3, 4), 21);
    EXPECT_EQ(general_upper(5, 7, 3, 4), 7 * 3 + 5 * 4 - 12);
    EXPECT_EQ(complete_factor(2, 3, 1), 4);
    EXPECT_EQ(kpartite_factor(5, 3, 2, 1), 3 * 3 + 5 - 3);
    EXPECT_EQ(generalized_tree_factor(6, 4, 2, 2), 4 * 3 + 6 * 2 - 3 * 2);
    EXPECT_EQ(tree_factor(5, 5, 2, 1), 9);
    EXPECT_EQ(antipodal_factor(6, 4, 2), 12 + 12 - 6);
    EXPECT_EQ(grid_factor(9, 3, 1), 9 + 9 - 3);
    EXPECT_EQ(c1_lower(5, 5, 3, 3), 5 * 2 + 3 * 3);
    EXPECT_EQ(odd_cycle_lower(5, 2, 3), 15 + 4);
    EXPECT_EQ(odd_cycle_upper(5, 2, 3), 15 + 6);
    for (int t = 1 ; t <= 5 ; ++t)
        EXPECT_EQ(c3_exact(t), std::vector<int>({ 8, 13, 18, 23, 28 })[t - 1]);
    EXPECT_EQ(odd_odd_independence(2, 3), 7);
    EXPECT_EQ(odd_odd_lower(2, 2), 12 + 4 + 4 + 1 - 1);
    EXPECT_EQ(odd_odd_upper(2, 2), 21);
}

TEST(Formulas, CGraphExactMatchesComputation)
{
    // K_n and even cycles have C-graph SR graphs, so the upper bound is exact
    auto c6 = generate(family::Cycle{ 6 }), k3 = generate(family::Complete{ 3 }), p4 = generate(family::Path{ 4 });
    for (auto & [g, h] : std::vector<std::pair<Graph, Graph>>{ { c6, k3 }, { k3, p4 }, { c6, p4 } }) {
        int actual = strong_metric_dimension(product(ProductKind::strong, g, h)).dim;
        EXPECT_EQ(actual, formula::cgraph_exact(g.order(), h.order(), strong_metric_dimension(g).dim,
                    strong_metric_dimension(h).dim));
    }
}

TEST(Formulas, DomainChecksAndEvaluate)
{
    using namespace formula;
    EXPECT_THROW(general_upper(1, 3, 1, 1), Error);
    EXPECT_THROW(general_upper(3, 3, 3, 1), Error);
    EXPECT_THROW(kpartite_factor(4, 3, 4, 1), Error);
    EXPECT_THROW(antipodal_factor(5, 3, 1), Error);
    EXPECT_THROW(odd_odd_upper(3, 2), Error);
    EXPECT_THROW(c3_exact(0), Error);

    Params p;
    p.r = 2;
    p.t = 3;
    EXPECT_EQ(evaluate(Kind::odd_odd_independence, p), 7);
    EXPECT_THROW(evaluate(Kind::general_upper, p), Error);
    for (auto k : all_kinds())
        EXPECT_EQ(parse_kind(kind_name(k)), k);
    EXPECT_THROW(parse_kind("nope"), Error);
}
