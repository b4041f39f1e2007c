/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_DOT_HH
#define STRONGDIM_GUARD_DOT_HH 1

#include <strongdim/graph.hh>

#include <map>
#include <string>
#include <vector>

namespace strongdim
{
    struct DotOptions
    {
        std::string name = "G";
        /// Vertex labels, e.g. product coordinates "u,v". Empty means ids.
        std::vector<std::string> labels;
        /// Optional per-edge annotation, keyed by (u, v) with u < v.
        std::map<Edge, std::string> edge_labels;
        /// Vertices drawn highlighted (bases, covers).
        std::vector<Vertex> highlight;
    };

    auto to_dot(const Graph & g, const DotOptions & options = {}) -> std::string;
}

#endif
