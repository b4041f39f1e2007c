/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/dot.hh>

#include <algorithm>
#include <sstream>

using namespace strongdim;

auto strongdim::to_dot(const Graph & g, const DotOptions & options) -> std::string
{
    std::ostringstream out;
    out << "graph " << options.name << " {\n";
    for (Vertex v = 0 ; v < g.order() ; ++v) {
        out << "  " << v;
        bool labelled = static_cast<std::size_t>(v) < options.labels.size();
        bool highlighted = std::find(options.highlight.begin(), options.highlight.end(), v) != options.highlight.end();
        if (labelled || highlighted) {
            out << " [";
            if (labelled)
                out << "label=\"" << options.labels[v] << "\"";
            if (highlighted)
                out << (labelled ? ", " : "") << "style=filled, fillcolor=lightblue";
            out << "]";
        }
        out << ";\n";
    }
    for (auto & e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (auto it = options.edge_labels.find(e) ; it != options.edge_labels.end())
            out << " [label=\"" << it->second << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}
