/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_ISOMORPHISM_HH
#define STRONGDIM_GUARD_ISOMORPHISM_HH 1

#include <strongdim/graph.hh>

#include <optional>
#include <vector>

namespace strongdim
{
    inline constexpr int isomorphism_default_cap = 24;

    /// Desk-scale isomorphism test: colour refinement on the disjoint pair,
    /// then backtracking within colour classes. Throws cap_exceeded when
    /// either graph has more than cap vertices.
    auto graphs_isomorphic(const Graph & a, const Graph & b, int cap = isomorphism_default_cap) -> bool;

    /// As above, returning the mapping a -> b when one exists.
    auto find_isomorphism(const Graph & a, const Graph & b, int cap = isomorphism_default_cap)
        -> std::optional<std::vector<Vertex>>;
}

#endif
