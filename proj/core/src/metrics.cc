/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/metrics.hh>
#include <strongdim/error.hh>

#include <algorithm>
#include <cassert>
#include <string>

using namespace strongdim;

using std::optional;
using std::string;
using std::vector;

auto DistanceMatrix::distance(Vertex u, Vertex v) const -> optional<int>
{
    int d = _table[u * _order + v];
    if (d == unreachable_marker)
        return std::nullopt;
    return d;
}

auto DistanceMatrix::operator() (Vertex u, Vertex v) const -> int
{
    int d = _table[u * _order + v];
    assert(d != unreachable_marker);
    return d;
}

auto DistanceMatrix::all_reachable() const -> bool
{
    return std::find(_table.begin(), _table.end(), unreachable_marker) == _table.end();
}

auto DistanceMatrix::max_finite() const -> int
{
    int result = 0;
    for (auto d : _table)
        result = std::max(result, d);
    return result;
}

auto strongdim::all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    int n = g.order();
    DistanceMatrix result;
    result._order = n;
    result._table.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::unreachable_marker);

    // level-synchronous BFS over bitset frontiers
    for (Vertex source = 0 ; source < n ; ++source) {
        int * row = &result._table[static_cast<std::size_t>(source) * n];
        VertexSet unvisited = VertexSet::full(n);
        VertexSet frontier(n);
        frontier.insert(source);
        unvisited.erase(source);
        row[source] = 0;
        for (int depth = 1 ; ! frontier.empty() ; ++depth) {
            VertexSet next(n);
            frontier.for_each([&] (Vertex v) { next |= g.neighbourhood(v); });
            next &= unvisited;
            unvisited -= next;
            next.for_each([&] (Vertex v) { row[v] = depth; });
            frontier = std::move(next);
        }
    }
    return result;
}

auto strongdim::connected_components(const Graph & g) -> vector<VertexSet>
{
    vector<VertexSet> result;
    VertexSet unvisited = VertexSet::full(g.order());
    while (! unvisited.empty()) {
        VertexSet component(g.order()), frontier(g.order());
        frontier.insert(unvisited.first());
        while (! frontier.empty()) {
            component |= frontier;
            unvisited -= frontier;
            VertexSet next(g.order());
            frontier.for_each([&] (Vertex v) { next |= g.neighbourhood(v); });
            next &= unvisited;
            frontier = std::move(next);
        }
        result.push_back(std::move(component));
    }
    return result;
}

auto strongdim::is_connected(const Graph & g) -> bool
{
    return g.order() >= 1 && connected_components(g).size() == 1;
}

auto strongdim::require_connected(const Graph & g, const char * operation) -> void
{
    if (! is_connected(g))
        throw Error(ErrorKind::disconnected, string(operation) + " needs a connected graph");
}

auto strongdim::diameter(const Graph & g) -> int
{
    require_connected(g, "diameter");
    return all_pairs_distances(g).max_finite();
}

auto strongdim::is_two_antipodal(const Graph & g) -> bool
{
    require_connected(g, "is_two_antipodal");
    auto dm = all_pairs_distances(g);
    int d = dm.max_finite();
    for (Vertex x = 0 ; x < g.order() ; ++x) {
        int at_diameter = 0;
        for (Vertex y = 0 ; y < g.order() ; ++y)
            if (dm(x, y) == d)
                ++at_diameter;
        if (at_diameter != 1)
            return false;
    }
    return true;
}

namespace
{
    struct BlockDecomposition
    {
        vector<VertexSet> blocks;
        VertexSet cut_vertices;
    };

    /// Iterative Hopcroft–Tarjan low-link traversal with an edge stack.
    auto decompose(const Graph & g) -> BlockDecomposition
    {
        int n = g.order();
        BlockDecomposition result{ {}, VertexSet(n) };
        vector<int> discovered(n, -1), low(n, 0), parent(n, -1);
        vector<Edge> edge_stack;
        int time = 0;

        struct Frame { Vertex v; Vertex next_neighbour; int children; };

        for (Vertex root = 0 ; root < n ; ++root) {
            if (discovered[root] != -1)
                continue;
            if (g.degree(root) == 0) {
                VertexSet single(n);
                single.insert(root);
                result.blocks.push_back(single);
                discovered[root] = time++;
                continue;
            }

            vector<Frame> stack{ { root, g.neighbourhood(root).first(), 0 } };
            discovered[root] = low[root] = time++;

            while (! stack.empty()) {
                auto & frame = stack.back();
                Vertex v = frame.v;
                if (frame.next_neighbour != -1) {
                    Vertex w = frame.next_neighbour;
                    frame.next_neighbour = g.neighbourhood(v).next(w);
                    if (discovered[w] == -1) {
                        parent[w] = v;
                        ++frame.children;
                        edge_stack.emplace_back(v, w);
                        discovered[w] = low[w] = time++;
                        stack.push_back({ w, g.neighbourhood(w).first(), 0 });
                    }
                    else if (w != parent[v] && discovered[w] < discovered[v]) {
                        edge_stack.emplace_back(v, w);
                        low[v] = std::min(low[v], discovered[w]);
                    }
                    continue;
                }

                int children = frame.children;
                stack.pop_back();
                if (stack.empty()) {
                    if (children >= 2)
                        result.cut_vertices.insert(v);
                    continue;
                }

                Vertex u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= discovered[u]) {
                    if (parent[u] != -1)
                        result.cut_vertices.insert(u);
                    VertexSet block(n);
                    while (true) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.insert(a);
                        block.insert(b);
                        if (a == u && b == v)
                            break;
                    }
                    result.blocks.push_back(std::move(block));
                }
            }
        }
        return result;
    }
}

auto strongdim::cut_vertices(const Graph & g) -> VertexSet
{
    require_connected(g, "cut_vertices");
    return decompose(g).cut_vertices;
}

auto strongdim::blocks(const Graph & g) -> vector<VertexSet>
{
    require_connected(g, "blocks");
    return decompose(g).blocks;
}

auto strongdim::is_clique(const Graph & g, const VertexSet & s) -> bool
{
    bool result = true;
    s.for_each([&] (Vertex v) {
        VertexSet others = s;
        others.erase(v);
        if (! others.is_subset_of(g.neighbourhood(v)))
            result = false;
    });
    return result;
}

auto strongdim::is_independent(const Graph & g, const VertexSet & s) -> bool
{
    bool result = true;
    s.for_each([&] (Vertex v) {
        if (g.neighbourhood(v).intersects(s))
            result = false;
    });
    return result;
}

auto strongdim::is_generalized_tree(const Graph & g) -> bool
{
    require_connected(g, "is_generalized_tree");
    for (auto & block : decompose(g).blocks)
        if (! is_clique(g, block))
            return false;
    return true;
}

auto strongdim::is_tree(const Graph & g) -> bool
{
    return is_connected(g) && g.size() == g.order() - 1;
}

auto strongdim::leaf_count(const Graph & g) -> int
{
    require_connected(g, "leaf_count");
    int result = 0;
    for (Vertex v = 0 ; v < g.order() ; ++v)
        if (g.degree(v) == 1)
            ++result;
    return result;
}

auto strongdim::is_simplicial(const Graph & g, Vertex v) -> bool
{
    return is_clique(g, g.closed_neighbourhood(v));
}
