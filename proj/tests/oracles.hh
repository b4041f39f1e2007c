/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_TESTS_ORACLES_HH
#define STRONGDIM_GUARD_TESTS_ORACLES_HH 1

// Slow, obviously-correct reference computations. They share nothing with
// the library beyond the Graph container, so agreement is evidence.

#include <strongdim/graph.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <vector>

namespace oracle
{
    using strongdim::Graph;

    inline constexpr int unreachable = -1;

    inline auto distances(const Graph & g) -> std::vector<std::vector<int>>
    {
        int n = g.order();
        std::vector<std::vector<int>> d(n, std::vector<int>(n, unreachable));
        for (int s = 0 ; s < n ; ++s) {
            std::queue<int> q;
            d[s][s] = 0;
            q.push(s);
            while (! q.empty()) {
                int u = q.front();
                q.pop();
                for (int v = 0 ; v < n ; ++v)
                    if (g.adjacent(u, v) && d[s][v] == unreachable) {
                        d[s][v] = d[s][u] + 1;
                        q.push(v);
                    }
            }
        }
        return d;
    }

    /// u is maximally distant from v: no neighbour of u is farther from v.
    inline auto maximally_distant(const Graph & g, const std::vector<std::vector<int>> & d, int u, int v) -> bool
    {
        for (int w = 0 ; w < g.order() ; ++w)
            if (g.adjacent(u, w) && d[v][w] > d[v][u])
                return false;
        return true;
    }

    inline auto strong_resolving_graph(const Graph & g) -> Graph
    {
        auto d = distances(g);
        Graph result(g.order());
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if (maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u))
                    result.add_edge(u, v);
        return result;
    }

    inline auto is_vertex_cover(const Graph & g, std::uint64_t mask) -> bool
    {
        for (auto & [u, v] : g.edges())
            if (! (mask >> u & 1) && ! (mask >> v & 1))
                return false;
        return true;
    }

    /// Minimum vertex cover size by trying all 2^n subsets.
    inline auto vertex_cover_number(const Graph & g) -> int
    {
        int n = g.order(), best = n;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << n) ; ++mask)
            if (std::popcount(mask) < best && is_vertex_cover(g, mask))
                best = std::popcount(mask);
        return best;
    }

    inline auto independence_number(const Graph & g) -> int
    {
        return g.order() - vertex_cover_number(g);
    }

    /// Minimum number of cliques partitioning V, by trying every set
    /// partition (restricted growth strings).
    inline auto clique_cover_number(const Graph & g) -> int
    {
        int n = g.order();
        if (n == 0)
            return 0;
        std::vector<int> block(n, 0);
        int best = n;
        std::function<void (int, int)> extend = [&] (int v, int used) {
            if (used >= best)
                return;
            if (v == n) {
                best = used;
                return;
            }
            for (int b = 0 ; b <= used && b < n ; ++b) {
                bool ok = true;
                for (int u = 0 ; u < v && ok ; ++u)
                    if (block[u] == b && ! g.adjacent(u, v))
                        ok = false;
                if (! ok)
                    continue;
                block[v] = b;
                extend(v + 1, std::max(used, b + 1));
            }
        };
        extend(0, 0);
        return best;
    }

    inline auto component_count(const Graph & g, int skip = -1) -> int
    {
        int n = g.order(), count = 0;
        std::vector<bool> seen(n, false);
        for (int s = 0 ; s < n ; ++s) {
            if (s == skip || seen[s])
                continue;
            ++count;
            std::vector<int> stack{ s };
            seen[s] = true;
            while (! stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v = 0 ; v < n ; ++v)
                    if (v != skip && ! seen[v] && g.adjacent(u, v)) {
                        seen[v] = true;
                        stack.push_back(v);
                    }
            }
        }
        return count;
    }

    /// w strongly resolves u, v: some shortest w-u path passes v, or the
    /// other way round.
    inline auto strongly_resolves(const std::vector<std::vector<int>> & d, int w, int u, int v) -> bool
    {
        return d[w][u] == d[w][v] + d[v][u] || d[w][v] == d[w][u] + d[u][v];
    }

    /// Smallest strong metric generator by increasing subset size.
    inline auto strong_metric_dimension(const Graph & g) -> int
    {
        auto d = distances(g);
        int n = g.order();
        int best = n;
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << n) ; ++mask) {
            if (std::popcount(mask) >= best)
                continue;
            bool ok = true;
            for (int u = 0 ; u < n && ok ; ++u)
                for (int v = u + 1 ; v < n && ok ; ++v) {
                    bool resolved = false;
                    for (int w = 0 ; w < n && ! resolved ; ++w)
                        if (mask >> w & 1)
                            resolved = strongly_resolves(d, w, u, v);
                    ok = resolved;
                }
            if (ok)
                best = std::popcount(mask);
        }
        return best;
    }

    inline auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        Graph g(n);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p)
                    g.add_edge(u, v);
        return g;
    }

    inline auto random_connected_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        while (true) {
            auto g = random_graph(n, p, rng);
            if (component_count(g) == 1)
                return g;
        }
    }
}

#endif
