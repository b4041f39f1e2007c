/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_STRONG_DIM_HH
#define STRONGDIM_GUARD_STRONG_DIM_HH 1

#include <strongdim/exact.hh>
#include <strongdim/graph.hh>
#include <strongdim/metrics.hh>

#include <cstdint>
#include <string_view>

namespace strongdim
{
    enum class DimensionMethod { sr_cover, brute_force };

    auto dimension_method_name(DimensionMethod m) -> std::string_view;

    struct DimensionResult
    {
        int dim = 0;
        /// A strong metric basis.
        VertexSet basis;
        DimensionMethod method = DimensionMethod::sr_cover;
    };

    /// w lies on a geodesic ending at u through v, or at v through u.
    /// Throws invalid_argument when u == v.
    auto strongly_resolves(const DistanceMatrix & dm, Vertex w, Vertex u, Vertex v) -> bool;

    /// Every unordered pair of distinct vertices is strongly resolved by some
    /// member of s.
    auto is_strong_generator(const Graph & g, const VertexSet & s) -> bool;

    /// Minimum vertex cover of the strong resolving graph. The basis is
    /// checked against the generator definition before returning, and a
    /// failure there is reported as an internal error.
    auto strong_metric_dimension(const Graph & g, std::uint64_t node_budget = default_node_budget) -> DimensionResult;

    inline constexpr int brute_force_default_cap = 15;

    /// Smallest generator by enumeration: subsets in increasing size,
    /// lexicographic within a size.
    auto brute_force_dimension(const Graph & g, int size_cap = brute_force_default_cap) -> DimensionResult;
}

#endif
