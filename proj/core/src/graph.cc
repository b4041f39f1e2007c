/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/graph.hh>
#include <strongdim/error.hh>

#include <algorithm>
#include <string>

using namespace strongdim;

using std::to_string;
using std::vector;

Graph::Graph(int order) :
    _order(order),
    _rows(order, VertexSet(order))
{
    if (order < 0)
        throw Error(ErrorKind::invalid_argument, "negative vertex count");
}

auto Graph::size() const -> int
{
    int twice = 0;
    for (auto & row : _rows)
        twice += row.count();
    return twice / 2;
}

auto Graph::closed_neighbourhood(Vertex v) const -> VertexSet
{
    VertexSet result = _rows[v];
    result.insert(v);
    return result;
}

auto Graph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    for (Vertex u = 0 ; u < _order ; ++u)
        for (Vertex v = _rows[u].next(u) ; v != -1 ; v = _rows[u].next(v))
            result.emplace_back(u, v);
    return result;
}

auto Graph::add_edge(Vertex u, Vertex v) -> void
{
    if (u < 0 || v < 0 || u >= _order || v >= _order)
        throw Error(ErrorKind::invalid_argument, "edge endpoint out of range: (" + to_string(u) + ","
                + to_string(v) + ") with n=" + to_string(_order));
    if (u == v)
        throw Error(ErrorKind::invalid_argument, "loop edge at vertex " + to_string(u));
    _rows[u].insert(v);
    _rows[v].insert(u);
}

auto strongdim::make_graph(int order, const vector<Edge> & edges) -> Graph
{
    Graph result(order);
    for (auto & [u, v] : edges)
        result.add_edge(u, v);
    return result;
}

auto strongdim::complement(const Graph & g) -> Graph
{
    Graph result(g.order());
    for (Vertex u = 0 ; u < g.order() ; ++u)
        for (Vertex v = u + 1 ; v < g.order() ; ++v)
            if (! g.adjacent(u, v))
                result.add_edge(u, v);
    return result;
}

auto strongdim::disjoint_union(const vector<Graph> & graphs) -> Graph
{
    int total = 0;
    for (auto & g : graphs)
        total += g.order();

    Graph result(total);
    int offset = 0;
    for (auto & g : graphs) {
        for (auto & [u, v] : g.edges())
            result.add_edge(u + offset, v + offset);
        offset += g.order();
    }
    return result;
}

auto strongdim::induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
{
    vector<int> index(g.order(), -1);
    auto kept = keep.members();
    for (std::size_t i = 0 ; i < kept.size() ; ++i)
        index[kept[i]] = static_cast<int>(i);

    Graph result(static_cast<int>(kept.size()));
    for (auto & [u, v] : g.edges())
        if (index[u] != -1 && index[v] != -1)
            result.add_edge(index[u], index[v]);
    return result;
}

auto strongdim::remove_vertex(const Graph & g, Vertex v) -> Graph
{
    auto keep = VertexSet::full(g.order());
    keep.erase(v);
    return induced_subgraph(g, keep);
}

auto strongdim::is_spanning_subgraph(const Graph & sub, const Graph & super) -> bool
{
    if (sub.order() != super.order())
        return false;
    for (Vertex v = 0 ; v < sub.order() ; ++v)
        if (! sub.neighbourhood(v).is_subset_of(super.neighbourhood(v)))
            return false;
    return true;
}

auto strongdim::degree_sequence(const Graph & g) -> vector<int>
{
    vector<int> result;
    for (Vertex v = 0 ; v < g.order() ; ++v)
        result.push_back(g.degree(v));
    std::sort(result.begin(), result.end(), std::greater<>{});
    return result;
}
