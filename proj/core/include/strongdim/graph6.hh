/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_GRAPH6_HH
#define STRONGDIM_GUARD_GRAPH6_HH 1

#include <strongdim/graph.hh>

#include <string>
#include <string_view>

namespace strongdim
{
    /// Largest order accepted by the graph6 codec (18-bit size header).
    inline constexpr int graph6_max_order = (1 << 18) - 1;

    /// Decodes one graph6 line. An optional `>>graph6<<` prefix and a single
    /// trailing newline are accepted; anything else after the bit stream is
    /// rejected.
    auto from_graph6(std::string_view text) -> Graph;

    auto to_graph6(const Graph & g) -> std::string;
}

#endif
