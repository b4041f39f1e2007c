/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/dot.hh>
#include <strongdim/error.hh>
#include <strongdim/generators.hh>
#include <strongdim/graph.hh>
#include <strongdim/graph6.hh>
#include <strongdim/isomorphism.hh>
#include <strongdim/metrics.hh>
#include <strongdim/vertex_set.hh>

#include "oracles.hh"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace strongdim;

namespace
{
    auto petersen() -> Graph
    {
        return make_graph(10, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 }, { 4, 0 }, { 0, 5 }, { 1, 6 }, { 2, 7 },
                { 3, 8 }, { 4, 9 }, { 5, 7 }, { 7, 9 }, { 9, 6 }, { 6, 8 }, { 8, 5 } });
    }

    auto relabel(const Graph & g, const std::vector<int> & p) -> Graph
    {
        Graph result(g.order());
        for (auto & [u, v] : g.edges())
            result.add_edge(p[u], p[v]);
        return result;
    }

    auto expect_kind(ErrorKind kind, auto && f) -> void
    {
        try {
            f();
            ADD_FAILURE() << "expected " << error_kind_name(kind);
        }
        catch (const Error & e) {
            EXPECT_EQ(e.kind(), kind) << e.what();
        }
    }
}

TEST(VertexSet, BasicOperationsAcrossWordBoundaries)
{
    VertexSet s(130, { 0, 63, 64, 129 });
    EXPECT_EQ(s.count(), 4);
    EXPECT_EQ(s.first(), 0);
    EXPECT_EQ(s.next(0), 63);
    EXPECT_EQ(s.next(64), 129);
    EXPECT_EQ(s.next(129), -1);
    EXPECT_EQ(s.complement().count(), 126);
    EXPECT_FALSE(s.complement().contains(129));

    VertexSet t(130, { 63, 100 });
    EXPECT_EQ((s & t).members(), std::vector<Vertex>{ 63 });
    EXPECT_EQ((s | t).count(), 5);
    EXPECT_EQ((s - t).count(), 3);
    EXPECT_EQ(s.intersection_count(t), 1);
    EXPECT_TRUE(VertexSet(130, { 63 }).is_subset_of(s));
    EXPECT_TRUE(VertexSet(130).empty());
    EXPECT_EQ(VertexSet::full(130).count(), 130);
}

TEST(Graph, RejectsLoopsAndOutOfRange)
{
    Graph g(3);
    expect_kind(ErrorKind::invalid_argument, [&] { g.add_edge(1, 1); });
    expect_kind(ErrorKind::invalid_argument, [&] { g.add_edge(0, 3); });
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    EXPECT_EQ(g.size(), 1);
}

TEST(Graph, ComplementAndUnion)
{
    auto c5 = generate(family::Cycle{ 5 });
    EXPECT_TRUE(graphs_isomorphic(complement(c5), c5));
    auto u = disjoint_union({ generate(family::Complete{ 3 }), generate(family::Path{ 2 }) });
    EXPECT_EQ(u.order(), 5);
    EXPECT_EQ(u.size(), 4);
    EXPECT_TRUE(u.adjacent(3, 4));
    EXPECT_EQ(remove_vertex(c5, 0).size(), 3);
}

TEST(Generators, FamilySizes)
{
    EXPECT_EQ(generate(family::Path{ 6 }).size(), 5);
    EXPECT_EQ(generate(family::Cycle{ 7 }).size(), 7);
    EXPECT_EQ(generate(family::Complete{ 6 }).size(), 15);
    EXPECT_EQ(generate(family::Star{ 5 }).size(), 4);
    EXPECT_EQ(generate(family::Hypercube{ 3 }).size(), 12);
    EXPECT_EQ(generate(family::Grid{ 3, 4 }).size(), 3 * 3 + 2 * 4);
    // K_{2,2,3}: 7 choose 2 minus the edges inside parts
    EXPECT_EQ(generate(family::CompleteMultipartite{ { 2, 2, 3 } }).size(), 21 - 1 - 1 - 3);
}

TEST(Generators, GeneralizedTreeBlocks)
{
    auto g = generate(family::GeneralizedTree{ { 3, 4, 2, 3 }, 11 });
    EXPECT_EQ(g.order(), 3 + 3 + 1 + 2);
    EXPECT_TRUE(is_generalized_tree(g));
    EXPECT_EQ(blocks(g).size(), 4u);
}

TEST(Generators, ParseRoundTrip)
{
    for (auto text : { "path:4", "cycle:7", "complete:5", "star:6", "hypercube:3", "kpartite:2,2,3", "grid:3x4",
            "gtree:3,3,4@7", "random:8,0.4@42" })
        EXPECT_EQ(family_name(parse_family(text)), text);
    EXPECT_EQ(generate(parse_family("multipartite:1,2")), generate(parse_family("kpartite:1,2")));
    for (auto bad : { "path", "grid:3", "nope:3", "path:x", "random:5", "gtree:3,x@1" })
        expect_kind(ErrorKind::parse_error, [&] { parse_family(bad); });
    for (auto out_of_range : { "cycle:2", "kpartite:3", "random:5,1.5@1", "path:0" })
        expect_kind(ErrorKind::invalid_argument, [&] { generate(parse_family(out_of_range)); });
}

TEST(Generators, SeededRandomIsReproducible)
{
    EXPECT_EQ(generate(parse_family("random:9,0.3@5")), generate(parse_family("random:9,0.3@5")));
    EXPECT_TRUE(is_connected(generate(parse_family("random:9,0.3@5"))));
    Rng a(3), b(3);
    EXPECT_EQ(random_tree(12, a), random_tree(12, b));
}

TEST(Graph6, KnownEncodings)
{
    EXPECT_EQ(to_graph6(generate(family::Path{ 4 })), "Ch");
    EXPECT_EQ(to_graph6(generate(family::Cycle{ 5 })), "Dhc");
    EXPECT_EQ(to_graph6(generate(family::Complete{ 4 })), "C~");
    EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    auto p63 = to_graph6(generate(family::Path{ 63 }));
    EXPECT_EQ(p63.substr(0, 8), "~??~hCGG");
    EXPECT_EQ(from_graph6(p63), generate(family::Path{ 63 }));
}

TEST(Graph6, RoundTripProperty)
{
    std::mt19937_64 rng(2024);
    for (int i = 0 ; i < 200 ; ++i) {
        int n = static_cast<int>(rng() % 80);
        auto g = oracle::random_graph(n, 0.3, rng);
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, AcceptsHeaderAndNewline)
{
    EXPECT_EQ(from_graph6(">>graph6<<Ch\n"), generate(family::Path{ 4 }));
    EXPECT_EQ(from_graph6("Ch\r\n"), generate(family::Path{ 4 }));
}

TEST(Graph6, RejectsMalformedInput)
{
    for (auto bad : { "", "C", "Cx x", "Chh", "C\x7f", "BA", "~~", "~?" })
        expect_kind(ErrorKind::parse_error, [&] { from_graph6(bad); });
}

TEST(Isomorphism, RelabellingsAndNearMisses)
{
    std::mt19937_64 rng(7);
    for (int i = 0 ; i < 30 ; ++i) {
        auto g = oracle::random_graph(9, 0.4, rng);
        std::vector<int> p(9);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        auto h = relabel(g, p);
        auto map = find_isomorphism(g, h);
        ASSERT_TRUE(map);
        for (auto & [u, v] : g.edges())
            EXPECT_TRUE(h.adjacent((*map)[u], (*map)[v]));
    }
    // same degree sequences, different graphs
    EXPECT_FALSE(graphs_isomorphic(generate(family::Cycle{ 6 }),
                disjoint_union({ generate(family::Cycle{ 3 }), generate(family::Cycle{ 3 }) })));
    auto prism = make_graph(6, { { 0, 1 }, { 1, 2 }, { 2, 0 }, { 3, 4 }, { 4, 5 }, { 5, 3 }, { 0, 3 }, { 1, 4 }, { 2, 5 } });
    EXPECT_FALSE(graphs_isomorphic(prism, generate(family::CompleteMultipartite{ { 3, 3 } })));
    EXPECT_TRUE(graphs_isomorphic(generate(family::Hypercube{ 2 }), generate(family::Cycle{ 4 })));
    expect_kind(ErrorKind::cap_exceeded, [&] { graphs_isomorphic(Graph(30), Graph(30), 24); });
}

TEST(Dot, EmitsEdgesLabelsAndHighlights)
{
    DotOptions options;
    options.name = "T";
    options.labels = { "a", "b", "c" };
    options.edge_labels[{ 0, 1 }] = "i";
    options.highlight = { 2 };
    auto text = to_dot(generate(family::Path{ 3 }), options);
    EXPECT_NE(text.find("graph T {"), std::string::npos);
    EXPECT_NE(text.find("0 -- 1"), std::string::npos);
    EXPECT_NE(text.find("\"i\""), std::string::npos);
    EXPECT_NE(text.find("\"a\""), std::string::npos);
}
