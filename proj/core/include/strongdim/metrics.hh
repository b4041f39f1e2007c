/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_METRICS_HH
#define STRONGDIM_GUARD_METRICS_HH 1

#include <strongdim/graph.hh>

#include <optional>
#include <vector>

namespace strongdim
{
    /// All-pairs hop distances. Unreachable pairs are held as a distinct
    /// state rather than a large number, so they cannot leak into max or
    /// comparison arithmetic: distance() returns nullopt for them, and the
    /// unchecked accessor asserts reachability.
    class DistanceMatrix
    {
        private:
            static constexpr int unreachable_marker = -1;

            int _order = 0;
            std::vector<int> _table;

            friend auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

        public:
            DistanceMatrix() = default;

            auto order() const -> int { return _order; }

            auto reachable(Vertex u, Vertex v) const -> bool
            {
                return _table[u * _order + v] != unreachable_marker;
            }

            auto distance(Vertex u, Vertex v) const -> std::optional<int>;

            /// Hop count; u and v must be reachable from each other.
            auto operator() (Vertex u, Vertex v) const -> int;

            /// True iff every pair is reachable.
            auto all_reachable() const -> bool;

            /// Largest finite distance.
            auto max_finite() const -> int;
    };

    auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

    /// True iff n >= 1 and there is a single component.
    auto is_connected(const Graph & g) -> bool;

    auto connected_components(const Graph & g) -> std::vector<VertexSet>;

    /// Throws disconnected unless g is connected.
    auto require_connected(const Graph & g, const char * operation) -> void;

    auto diameter(const Graph & g) -> int;

    /// Every vertex has exactly one vertex at distance diameter(g).
    auto is_two_antipodal(const Graph & g) -> bool;

    auto cut_vertices(const Graph & g) -> VertexSet;

    /// Biconnected components as vertex sets, in discovery order. Bridges
    /// are blocks of two vertices.
    auto blocks(const Graph & g) -> std::vector<VertexSet>;

    /// Block-graph test: every block induces a complete subgraph.
    auto is_generalized_tree(const Graph & g) -> bool;

    auto is_tree(const Graph & g) -> bool;

    auto leaf_count(const Graph & g) -> int;

    /// N[v] induces a complete subgraph.
    auto is_simplicial(const Graph & g, Vertex v) -> bool;

    auto is_clique(const Graph & g, const VertexSet & s) -> bool;
    auto is_independent(const Graph & g, const VertexSet & s) -> bool;
}

#endif
