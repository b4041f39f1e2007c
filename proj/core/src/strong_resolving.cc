/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/strong_resolving.hh>
#include <strongdim/error.hh>

#include <string>

using namespace strongdim;

using std::array;
using std::string;
using std::string_view;
using std::vector;

namespace
{
    auto require_nontrivial_connected(const Graph & g, const char * operation) -> void
    {
        require_connected(g, operation);
        if (g.order() < 2)
            throw Error(ErrorKind::trivial_graph, string(operation) + " needs at least 2 vertices");
    }

    auto maximally_distant_unchecked(const DistanceMatrix & dm, const Graph & g, Vertex u, Vertex v) -> bool
    {
        int duv = dm(u, v);
        for (Vertex w = g.neighbourhood(u).first() ; w != -1 ; w = g.neighbourhood(u).next(w))
            if (dm(v, w) > duv)
                return false;
        return true;
    }

    auto mmd_unchecked(const DistanceMatrix & dm, const Graph & g, Vertex u, Vertex v) -> bool
    {
        return u != v && maximally_distant_unchecked(dm, g, u, v) && maximally_distant_unchecked(dm, g, v, u);
    }

    /// Dense MMD relation of a factor, diagonal false.
    auto mmd_table(const Graph & g, const DistanceMatrix & dm) -> vector<char>
    {
        int n = g.order();
        vector<char> result(static_cast<std::size_t>(n) * n, 0);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                if (mmd_unchecked(dm, g, u, v))
                    result[u * n + v] = result[v * n + u] = 1;
        return result;
    }
}

auto strongdim::is_maximally_distant(const DistanceMatrix & dm, const Graph & g, Vertex u, Vertex v) -> bool
{
    if (! dm.all_reachable())
        throw Error(ErrorKind::disconnected, "is_maximally_distant needs a connected graph");
    return maximally_distant_unchecked(dm, g, u, v);
}

auto strongdim::mutually_maximally_distant(const DistanceMatrix & dm, const Graph & g, Vertex u, Vertex v) -> bool
{
    if (! dm.all_reachable())
        throw Error(ErrorKind::disconnected, "mutually_maximally_distant needs a connected graph");
    return mmd_unchecked(dm, g, u, v);
}

auto strongdim::strong_resolving_graph(const Graph & g) -> SRGraph
{
    require_nontrivial_connected(g, "strong_resolving_graph");
    auto dm = all_pairs_distances(g);
    Graph sr(g.order());

    for (Vertex u = 0 ; u < g.order() ; ++u)
        for (Vertex v = u + 1 ; v < g.order() ; ++v)
            if (mmd_unchecked(dm, g, u, v))
                sr.add_edge(u, v);

    return SRGraph{ g, std::move(sr) };
}

auto strongdim::boundary(const Graph & g) -> VertexSet
{
    auto sr = strong_resolving_graph(g).sr;
    VertexSet result(g.order());
    for (Vertex v = 0 ; v < g.order() ; ++v)
        if (sr.degree(v) > 0)
            result.insert(v);
    return result;
}

auto strongdim::mmd_condition_tag(MmdCondition c) -> string_view
{
    switch (c) {
        case MmdCondition::both_mmd:        return "i";
        case MmdCondition::g_mmd_same_h:    return "ii";
        case MmdCondition::h_mmd_same_g:    return "iii";
        case MmdCondition::g_mmd_g_farther: return "iv";
        case MmdCondition::h_mmd_h_farther: return "v";
    }
    return "?";
}

auto PredictedMmd::as_graph() const -> Graph
{
    Graph result(spec.order());
    for (auto & e : edges)
        result.add_edge(e.a, e.b);
    return result;
}

auto PredictedMmd::condition_counts() const -> array<int, mmd_condition_count>
{
    array<int, mmd_condition_count> result{};
    for (auto & e : edges)
        ++result[static_cast<int>(e.condition)];
    return result;
}

auto strongdim::predicted_mmd_edges(const Graph & g, const Graph & h) -> PredictedMmd
{
    require_nontrivial_connected(g, "predicted_mmd_edges (G)");
    require_nontrivial_connected(h, "predicted_mmd_edges (H)");

    auto dg = all_pairs_distances(g), dh = all_pairs_distances(h);
    auto mg = mmd_table(g, dg), mh = mmd_table(h, dh);
    int n1 = g.order(), n2 = h.order();

    PredictedMmd result{ ProductSpec{ ProductKind::strong, n1, n2 }, {} };
    auto & spec = result.spec;

    for (Vertex p = 0 ; p < spec.order() ; ++p) {
        auto [u, v] = spec.decode(p);
        for (Vertex q = p + 1 ; q < spec.order() ; ++q) {
            auto [x, y] = spec.decode(q);
            bool g_mmd = mg[u * n1 + x], h_mmd = mh[v * n2 + y];
            int d_g = dg(u, x), d_h = dh(v, y);

            std::optional<MmdCondition> fired;
            if (g_mmd && h_mmd)
                fired = MmdCondition::both_mmd;
            else if (g_mmd && v == y)
                fired = MmdCondition::g_mmd_same_h;
            else if (h_mmd && u == x)
                fired = MmdCondition::h_mmd_same_g;
            else if (g_mmd && d_g > d_h)
                fired = MmdCondition::g_mmd_g_farther;
            else if (h_mmd && d_g < d_h)
                fired = MmdCondition::h_mmd_h_farther;

            if (fired)
                result.edges.push_back({ p, q, *fired });
        }
    }
    return result;
}
