/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/exact.hh>
#include <strongdim/error.hh>
#include <strongdim/metrics.hh>

#include <algorithm>
#include <string>

using namespace strongdim;

using std::optional;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    /// Greedy clique cover of G[p]: the number of cliques bounds beta(G[p]).
    auto greedy_clique_count(const Graph & g, const VertexSet & p) -> int
    {
        VertexSet left = p;
        int cliques = 0;
        while (! left.empty()) {
            ++cliques;
            VertexSet q = left;
            while (! q.empty()) {
                Vertex v = q.first();
                left.erase(v);
                q.erase(v);
                q &= g.neighbourhood(v);
            }
        }
        return cliques;
    }

    /// Minimum-degree greedy independent set of G[p].
    auto greedy_independent_set(const Graph & g, VertexSet p) -> VertexSet
    {
        VertexSet result(g.order());
        while (! p.empty()) {
            Vertex best = -1;
            int best_degree = 0;
            p.for_each([&] (Vertex v) {
                int d = g.neighbourhood(v).intersection_count(p);
                if (best == -1 || d < best_degree) {
                    best = v;
                    best_degree = d;
                }
            });
            result.insert(best);
            p -= g.closed_neighbourhood(best);
        }
        return result;
    }

    auto components_within(const Graph & g, const VertexSet & p) -> vector<VertexSet>
    {
        vector<VertexSet> result;
        VertexSet unvisited = p;
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

    /// Branch and bound for a maximum independent set; the cover is its
    /// complement. All state lives in one call of min_vertex_cover.
    class CoverSolver
    {
        private:
            const Graph & _g;
            uint64_t _budget;
            uint64_t _nodes = 0;
            bool _exhausted = false;

            /// Vertices of degree at most 1, and degree-2 vertices in a triangle, are always in
            /// some maximum independent set. With full set, every simplicial
            /// vertex is taken.
            auto reduce(VertexSet & p, VertexSet & chosen, bool full) -> void
            {
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (Vertex v = p.first() ; v != -1 ; v = p.next(v)) {
                        VertexSet nbrs = _g.neighbourhood(v) & p;
                        int d = nbrs.count();
                        bool take = false;
                        if (d <= 1)
                            take = true;
                        else if (d == 2) {
                            Vertex a = nbrs.first();
                            take = _g.adjacent(a, nbrs.next(a));
                        }
                        else if (full)
                            take = is_clique_within(nbrs);

                        if (take) {
                            chosen.insert(v);
                            p -= nbrs;
                            p.erase(v);
                            changed = true;
                        }
                    }
                }
            }

            auto is_clique_within(const VertexSet & s) const -> bool
            {
                for (Vertex v = s.first() ; v != -1 ; v = s.next(v)) {
                    VertexSet others = s;
                    others.erase(v);
                    if (! others.is_subset_of(_g.neighbourhood(v)))
                        return false;
                }
                return true;
            }

            auto branch(VertexSet p, VertexSet current, VertexSet & best) -> void
            {
                if (++_nodes > _budget) {
                    _exhausted = true;
                    return;
                }

                reduce(p, current, false);

                if (p.empty()) {
                    if (current.count() > best.count())
                        best = current;
                    return;
                }

                int have = current.count();
                if (have + greedy_clique_count(_g, p) <= best.count())
                    return;

                auto components = components_within(_g, p);
                if (components.size() > 1) {
                    VertexSet combined = current;
                    for (auto & c : components)
                        combined |= solve(c);
                    if (combined.count() > best.count())
                        best = combined;
                    return;
                }

                Vertex pivot = -1;
                int pivot_degree = -1;
                for (Vertex v = p.first() ; v != -1 ; v = p.next(v)) {
                    int d = _g.neighbourhood(v).intersection_count(p);
                    if (d > pivot_degree) {
                        pivot = v;
                        pivot_degree = d;
                    }
                }

                // pivot independent, so its neighbourhood is in the cover
                VertexSet with = current;
                with.insert(pivot);
                branch(p - _g.closed_neighbourhood(pivot), with, best);
                if (_exhausted)
                    return;

                // pivot in the cover
                p.erase(pivot);
                branch(std::move(p), std::move(current), best);
            }

        public:
            CoverSolver(const Graph & g, uint64_t budget) :
                _g(g),
                _budget(budget)
            {
            }

            /// Maximum independent set of G[p]; exact unless exhausted().
            auto solve(VertexSet p) -> VertexSet
            {
                VertexSet chosen(_g.order());
                reduce(p, chosen, true);
                if (p.empty())
                    return chosen;

                VertexSet best = greedy_independent_set(_g, p);
                if (! _exhausted)
                    branch(p, VertexSet(_g.order()), best);
                return chosen | best;
            }

            auto nodes() const -> uint64_t { return _nodes; }
            auto exhausted() const -> bool { return _exhausted; }
    };

    class DirectSolver
    {
        private:
            const Graph & _g;
            uint64_t _budget;
            uint64_t _nodes = 0;
            bool _exhausted = false;
            VertexSet _best;

            /// Vertices of p in clique-cover order with their clique numbers.
            auto colour_order(const VertexSet & p, vector<Vertex> & order, vector<int> & bounds) const -> void
            {
                order.clear();
                bounds.clear();
                VertexSet left = p;
                int clique = 0;
                while (! left.empty()) {
                    ++clique;
                    VertexSet q = left;
                    while (! q.empty()) {
                        Vertex v = q.first();
                        left.erase(v);
                        q.erase(v);
                        q &= _g.neighbourhood(v);
                        order.push_back(v);
                        bounds.push_back(clique);
                    }
                }
            }

            auto expand(VertexSet & current, VertexSet p) -> void
            {
                if (++_nodes > _budget) {
                    _exhausted = true;
                    return;
                }

                vector<Vertex> order;
                vector<int> bounds;
                colour_order(p, order, bounds);

                int have = current.count();
                for (int i = static_cast<int>(order.size()) - 1 ; i >= 0 ; --i) {
                    if (have + bounds[i] <= _best.count() || _exhausted)
                        return;

                    Vertex v = order[i];
                    current.insert(v);
                    VertexSet next = p - _g.closed_neighbourhood(v);
                    if (next.empty()) {
                        if (have + 1 > _best.count())
                            _best = current;
                    }
                    else
                        expand(current, std::move(next));
                    current.erase(v);
                    p.erase(v);
                }
            }

        public:
            DirectSolver(const Graph & g, uint64_t budget) :
                _g(g),
                _budget(budget),
                _best(g.order())
            {
            }

            auto run() -> VertexSet
            {
                VertexSet current(_g.order());
                if (_g.order() > 0)
                    expand(current, VertexSet::full(_g.order()));
                return _best;
            }

            auto exhausted() const -> bool { return _exhausted; }
    };

    auto budget_error(const char * what, uint64_t budget) -> Error
    {
        return Error(ErrorKind::budget_exhausted, string(what) + ": node budget of " + to_string(budget)
                + " exhausted before optimality was proven");
    }
}

auto strongdim::min_vertex_cover(const Graph & g, uint64_t node_budget) -> CoverResult
{
    CoverSolver solver(g, node_budget);
    auto independent = solver.solve(VertexSet::full(g.order()));
    CoverResult result;
    result.witness = independent.complement();
    result.size = result.witness.count();
    result.nodes_explored = solver.nodes();
    result.proven_optimal = ! solver.exhausted();
    return result;
}

auto strongdim::exact_vertex_cover(const Graph & g, uint64_t node_budget) -> CoverResult
{
    auto result = min_vertex_cover(g, node_budget);
    if (! result.proven_optimal)
        throw budget_error("min_vertex_cover", node_budget);
    return result;
}

auto strongdim::independence_number(const Graph & g, uint64_t node_budget) -> int
{
    return g.order() - exact_vertex_cover(g, node_budget).size;
}

auto strongdim::max_independent_set(const Graph & g, uint64_t node_budget) -> VertexSet
{
    return exact_vertex_cover(g, node_budget).witness.complement();
}

auto strongdim::max_independent_set_direct(const Graph & g, uint64_t node_budget) -> VertexSet
{
    DirectSolver solver(g, node_budget);
    auto result = solver.run();
    if (solver.exhausted())
        throw budget_error("max_independent_set_direct", node_budget);
    return result;
}

namespace
{
    class CliqueCoverSolver
    {
        private:
            const Graph & _g;
            int _lower;
            vector<VertexSet> _parts;
            vector<VertexSet> _best;
            VertexSet _unassigned;

            auto search() -> void
            {
                if (static_cast<int>(_best.size()) == _lower)
                    return;

                if (_unassigned.empty()) {
                    if (_parts.size() < _best.size())
                        _best = _parts;
                    return;
                }

                // most constrained vertex: fewest parts it could join
                Vertex pick = -1;
                int pick_options = 0;
                for (Vertex v = _unassigned.first() ; v != -1 ; v = _unassigned.next(v)) {
                    int options = 0;
                    for (auto & part : _parts)
                        if (part.is_subset_of(_g.neighbourhood(v)))
                            ++options;
                    if (pick == -1 || options < pick_options) {
                        pick = v;
                        pick_options = options;
                    }
                }

                _unassigned.erase(pick);
                for (std::size_t i = 0 ; i < _parts.size() ; ++i)
                    if (_parts[i].is_subset_of(_g.neighbourhood(pick))) {
                        _parts[i].insert(pick);
                        search();
                        _parts[i].erase(pick);
                    }

                if (_parts.size() + 1 < _best.size()) {
                    VertexSet fresh(_g.order());
                    fresh.insert(pick);
                    _parts.push_back(fresh);
                    search();
                    _parts.pop_back();
                }
                _unassigned.insert(pick);
            }

        public:
            CliqueCoverSolver(const Graph & g, int lower) :
                _g(g),
                _lower(lower),
                _unassigned(VertexSet::full(g.order()))
            {
                // greedy start; every vertex as a singleton is the fallback
                VertexSet left = VertexSet::full(g.order());
                while (! left.empty()) {
                    VertexSet part(g.order()), q = left;
                    while (! q.empty()) {
                        Vertex v = q.first();
                        part.insert(v);
                        left.erase(v);
                        q.erase(v);
                        q &= g.neighbourhood(v);
                    }
                    _best.push_back(part);
                }
            }

            auto run() -> vector<VertexSet>
            {
                search();
                return _best;
            }
    };
}

auto strongdim::clique_cover_number(const Graph & g, int cap) -> CliqueCover
{
    if (g.order() > cap)
        throw Error(ErrorKind::cap_exceeded, "clique cover limited to " + to_string(cap)
                + " vertices, got " + to_string(g.order()));

    int beta = independence_number(g);
    CliqueCoverSolver solver(g, beta);
    auto parts = solver.run();
    std::sort(parts.begin(), parts.end(), [] (const VertexSet & a, const VertexSet & b) {
            return a.first() < b.first(); });
    return CliqueCover{ static_cast<int>(parts.size()), CliquePartition{ std::move(parts) } };
}

auto strongdim::is_clique_partition(const Graph & g, const CliquePartition & p) -> bool
{
    VertexSet seen(g.order());
    for (auto & part : p.parts) {
        if (part.universe() != g.order() || part.empty() || part.intersects(seen) || ! is_clique(g, part))
            return false;
        seen |= part;
    }
    return seen.count() == g.order();
}

auto strongdim::is_c_graph(const Graph & g, int cap) -> bool
{
    return clique_cover_number(g, cap).count == independence_number(g);
}

auto strongdim::c1_partition(const Graph & g, int cap) -> optional<C1Partition>
{
    if (g.order() > cap)
        throw Error(ErrorKind::cap_exceeded, "C1 recognition limited to " + to_string(cap)
                + " vertices, got " + to_string(g.order()));
    if (g.order() < 2)
        return std::nullopt;

    int beta = independence_number(g);
    if (clique_cover_number(g, cap).count == beta)
        return std::nullopt;

    for (Vertex b = 0 ; b < g.order() ; ++b) {
        auto rest = remove_vertex(g, b);
        auto cover = clique_cover_number(rest, cap);
        if (cover.count != beta)
            continue;

        // lift part ids of g - b back to g
        C1Partition result{ {}, b };
        for (auto & part : cover.partition.parts) {
            VertexSet lifted(g.order());
            part.for_each([&] (Vertex v) { lifted.insert(v < b ? v : v + 1); });
            result.cliques.parts.push_back(lifted);
        }
        return result;
    }
    return std::nullopt;
}

auto strongdim::is_c1_graph(const Graph & g, int cap) -> bool
{
    return c1_partition(g, cap).has_value();
}
