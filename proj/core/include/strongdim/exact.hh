/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_EXACT_HH
#define STRONGDIM_GUARD_EXACT_HH 1

#include <strongdim/graph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace strongdim
{
    inline constexpr std::uint64_t default_node_budget = 50'000'000;
    inline constexpr int clique_cover_default_cap = 20;

    struct CoverResult
    {
        int size = 0;
        VertexSet witness;
        std::uint64_t nodes_explored = 0;
        /// False only when the node budget ran out; the witness is then a
        /// valid cover but possibly not a minimum one.
        bool proven_optimal = true;
    };

    /// Exact minimum vertex cover by branch and bound. Branches on a
    /// maximum-degree vertex (lowest id on ties): it joins the cover, or its
    /// whole neighbourhood does. Degree-0/1/2 reductions, splitting into
    /// components, and a clique-cover lower bound (which subsumes the
    /// matching bound) prune the search.
    auto min_vertex_cover(const Graph & g, std::uint64_t node_budget = default_node_budget) -> CoverResult;

    /// As min_vertex_cover, but throws budget_exhausted instead of
    /// returning an unproven result.
    auto exact_vertex_cover(const Graph & g, std::uint64_t node_budget = default_node_budget) -> CoverResult;

    /// beta(g) = n - alpha(g).
    auto independence_number(const Graph & g, std::uint64_t node_budget = default_node_budget) -> int;

    /// Complement of an exact minimum cover.
    auto max_independent_set(const Graph & g, std::uint64_t node_budget = default_node_budget) -> VertexSet;

    /// Independent route to a maximum independent set: colour-ordered
    /// clique search in the complement, with no reductions. Kept separate
    /// from the cover solver so the two can check each other.
    auto max_independent_set_direct(const Graph & g, std::uint64_t node_budget = default_node_budget) -> VertexSet;

    struct CliquePartition
    {
        std::vector<VertexSet> parts;
    };

    struct CliqueCover
    {
        int count = 0;
        CliquePartition partition;
    };

    /// Minimum number of cliques partitioning V, i.e. the chromatic number
    /// of the complement, by exact DSATUR-style branching.
    auto clique_cover_number(const Graph & g, int cap = clique_cover_default_cap) -> CliqueCover;

    /// Parts partition V(g) and each induces a clique.
    auto is_clique_partition(const Graph & g, const CliquePartition & p) -> bool;

    /// theta(g) == beta(g).
    auto is_c_graph(const Graph & g, int cap = clique_cover_default_cap) -> bool;

    struct C1Partition
    {
        CliquePartition cliques;
        Vertex singleton;
    };

    /// Not a C-graph, and some vertex b leaves a graph whose vertex set
    /// splits into beta(g) cliques. The singleton part need not have degree
    /// zero in g.
    auto c1_partition(const Graph & g, int cap = clique_cover_default_cap) -> std::optional<C1Partition>;

    auto is_c1_graph(const Graph & g, int cap = clique_cover_default_cap) -> bool;
}

#endif
