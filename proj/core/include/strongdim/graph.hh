/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_GRAPH_HH
#define STRONGDIM_GUARD_GRAPH_HH 1

#include <strongdim/vertex_set.hh>

#include <utility>
#include <vector>

namespace strongdim
{
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on the dense ids 0..n-1. Adjacency is a row
    /// of bits per vertex; symmetric and loop-free after every constructor.
    class Graph
    {
        private:
            int _order = 0;
            std::vector<VertexSet> _rows;

        public:
            Graph() = default;
            explicit Graph(int order);

            auto order() const -> int { return _order; }

            /// Number of edges.
            auto size() const -> int;

            auto adjacent(Vertex u, Vertex v) const -> bool { return _rows[u].contains(v); }
            auto neighbourhood(Vertex v) const -> const VertexSet & { return _rows[v]; }
            auto closed_neighbourhood(Vertex v) const -> VertexSet;
            auto degree(Vertex v) const -> int { return _rows[v].count(); }

            /// Edges as (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<Edge>;

            /// Adds uv if absent. Endpoints are checked.
            auto add_edge(Vertex u, Vertex v) -> void;

            auto operator== (const Graph & other) const -> bool = default;
    };

    /// Builds a graph from an edge list; duplicates are merged.
    auto make_graph(int order, const std::vector<Edge> & edges) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Blocks are relabelled by running offset, with no edges between them.
    auto disjoint_union(const std::vector<Graph> & graphs) -> Graph;

    /// Subgraph induced by keep, relabelled in increasing id order.
    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;

    auto remove_vertex(const Graph & g, Vertex v) -> Graph;

    /// True iff every edge of sub is an edge of super (same vertex set).
    auto is_spanning_subgraph(const Graph & sub, const Graph & super) -> bool;

    auto degree_sequence(const Graph & g) -> std::vector<int>;
}

#endif
