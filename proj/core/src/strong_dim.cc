/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/strong_dim.hh>
#include <strongdim/strong_resolving.hh>
#include <strongdim/error.hh>

#include <string>
#include <vector>

using namespace strongdim;

using std::string;
using std::string_view;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    auto require_nontrivial_connected(const Graph & g, const char * operation) -> void
    {
        require_connected(g, operation);
        if (g.order() < 2)
            throw Error(ErrorKind::trivial_graph, string(operation) + " needs at least 2 vertices");
    }

    auto resolves_unchecked(const DistanceMatrix & dm, Vertex w, Vertex u, Vertex v) -> bool
    {
        int duv = dm(u, v);
        return dm(w, u) == dm(w, v) + duv || dm(w, v) == dm(w, u) + duv;
    }
}

auto strongdim::dimension_method_name(DimensionMethod m) -> string_view
{
    return m == DimensionMethod::sr_cover ? "sr_cover" : "brute_force";
}

auto strongdim::strongly_resolves(const DistanceMatrix & dm, Vertex w, Vertex u, Vertex v) -> bool
{
    if (u == v)
        throw Error(ErrorKind::invalid_argument, "strongly_resolves needs distinct u and v");
    if (! dm.reachable(w, u) || ! dm.reachable(w, v) || ! dm.reachable(u, v))
        throw Error(ErrorKind::disconnected, "strongly_resolves needs a connected graph");
    return resolves_unchecked(dm, w, u, v);
}

auto strongdim::is_strong_generator(const Graph & g, const VertexSet & s) -> bool
{
    require_connected(g, "is_strong_generator");
    auto dm = all_pairs_distances(g);
    auto members = s.members();
    for (Vertex u = 0 ; u < g.order() ; ++u)
        for (Vertex v = u + 1 ; v < g.order() ; ++v) {
            bool resolved = false;
            for (auto w : members)
                if (resolves_unchecked(dm, w, u, v)) {
                    resolved = true;
                    break;
                }
            if (! resolved)
                return false;
        }
    return true;
}

auto strongdim::strong_metric_dimension(const Graph & g, uint64_t node_budget) -> DimensionResult
{
    require_nontrivial_connected(g, "strong_metric_dimension");
    auto sr = strong_resolving_graph(g);
    auto cover = exact_vertex_cover(sr.sr, node_budget);

    if (! is_strong_generator(g, cover.witness))
        throw std::logic_error("cover of the strong resolving graph is not a strong metric generator");

    return DimensionResult{ cover.size, cover.witness, DimensionMethod::sr_cover };
}

auto strongdim::brute_force_dimension(const Graph & g, int size_cap) -> DimensionResult
{
    require_nontrivial_connected(g, "brute_force_dimension");
    int n = g.order();
    if (n > size_cap || n > 63)
        throw Error(ErrorKind::cap_exceeded, "brute force limited to " + to_string(std::min(size_cap, 63))
                + " vertices, got " + to_string(n));

    auto dm = all_pairs_distances(g);
    vector<uint64_t> resolvers;
    for (Vertex u = 0 ; u < n ; ++u)
        for (Vertex v = u + 1 ; v < n ; ++v) {
            uint64_t mask = 0;
            for (Vertex w = 0 ; w < n ; ++w)
                if (resolves_unchecked(dm, w, u, v))
                    mask |= uint64_t{1} << w;
            resolvers.push_back(mask);
        }

    for (int k = 1 ; k <= n ; ++k) {
        vector<int> pick(k);
        for (int i = 0 ; i < k ; ++i)
            pick[i] = i;

        while (true) {
            uint64_t mask = 0;
            for (auto v : pick)
                mask |= uint64_t{1} << v;

            bool generates = true;
            for (auto r : resolvers)
                if (! (r & mask)) {
                    generates = false;
                    break;
                }
            if (generates) {
                DimensionResult result{ k, VertexSet(n), DimensionMethod::brute_force };
                for (auto v : pick)
                    result.basis.insert(v);
                return result;
            }

            // next k-combination in lexicographic order
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1 ; j < k ; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }

    throw std::logic_error("no strong metric generator found, but V itself is one");
}
