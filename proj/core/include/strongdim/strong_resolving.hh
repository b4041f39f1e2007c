/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_STRONG_RESOLVING_HH
#define STRONGDIM_GUARD_STRONG_RESOLVING_HH 1

#include <strongdim/graph.hh>
#include <strongdim/metrics.hh>
#include <strongdim/products.hh>

#include <array>
#include <string_view>
#include <vector>

namespace strongdim
{
    /// No neighbour of u is strictly farther from v than u is. Not symmetric.
    auto is_maximally_distant(const DistanceMatrix & dm, const Graph & g, Vertex u, Vertex v) -> bool;

    /// Both directions of is_maximally_distant, for distinct u and v.
    auto mutually_maximally_distant(const DistanceMatrix & dm, const Graph & g, Vertex u, Vertex v) -> bool;

    /// The strong resolving graph: same vertex ids as base, an edge for
    /// every mutually maximally distant pair.
    struct SRGraph
    {
        Graph base;
        Graph sr;
    };

    auto strong_resolving_graph(const Graph & g) -> SRGraph;

    /// Vertices in at least one mutually maximally distant pair.
    auto boundary(const Graph & g) -> VertexSet;

    /// Which disjunct of the product characterisation produced an edge.
    /// Conditions are tried in order and the first match is recorded.
    enum class MmdCondition
    {
        both_mmd,           ///< u,x MMD in G and v,y MMD in H
        g_mmd_same_h,       ///< u,x MMD in G and v = y
        h_mmd_same_g,       ///< v,y MMD in H and u = x
        g_mmd_g_farther,    ///< u,x MMD in G and d_G(u,x) > d_H(v,y)
        h_mmd_h_farther     ///< v,y MMD in H and d_G(u,x) < d_H(v,y)
    };

    inline constexpr int mmd_condition_count = 5;

    /// Roman-numeral tag "i" .. "v".
    auto mmd_condition_tag(MmdCondition c) -> std::string_view;

    struct PredictedEdge
    {
        Vertex a, b;
        MmdCondition condition;
    };

    struct PredictedMmd
    {
        ProductSpec spec;
        /// Sorted by (a, b) with a < b.
        std::vector<PredictedEdge> edges;

        auto as_graph() const -> Graph;
        auto condition_counts() const -> std::array<int, mmd_condition_count>;
    };

    /// Mutually maximally distant pairs of G ⊠ H predicted from factor-level
    /// MMD relations and factor distances alone; the product graph is never
    /// built.
    auto predicted_mmd_edges(const Graph & g, const Graph & h) -> PredictedMmd;
}

#endif
