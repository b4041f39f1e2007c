/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/corpus.hh>
#include <strongdim/error.hh>
#include <strongdim/graph6.hh>
#include <strongdim/metrics.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

using namespace strongdim;

using std::string;
using std::string_view;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr int pool_random_graphs = 16;

    auto filter_name(FactorFilter f) -> string
    {
        return f == FactorFilter::trees ? "trees" : "all";
    }
}

auto CorpusSpec::to_json() const -> nlohmann::json
{
    nlohmann::json result{
        { "exhaustive_n", exhaustive_n },
        { "samples", samples },
        { "sample_min_n", sample_min_n },
        { "sample_max_n", sample_max_n },
        { "max_product", max_product },
        { "beta_law_max_n", beta_law_max_n },
        { "oracle_samples", oracle_samples },
        { "oracle_min_n", oracle_min_n },
        { "oracle_max_n", oracle_max_n },
        { "t_max", t_max },
        { "odd_max", odd_max },
        { "filter", filter_name(filter) }
    };
    result["r"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
    result["t"] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
    return result;
}

auto strongdim::stable_hash(string_view text) -> uint64_t
{
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

auto strongdim::all_connected_graphs(int n) -> vector<Graph>
{
    if (n < 1 || n > 6)
        throw Error(ErrorKind::cap_exceeded, "exhaustive enumeration supports 1 <= n <= 6, got " + to_string(n));

    vector<Edge> slots;
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            slots.emplace_back(u, v);

    vector<vector<int>> perms;
    vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm); while (std::next_permutation(perm.begin(), perm.end()));

    // canonical code: least edge bitmask over all relabellings
    std::set<std::pair<int, uint64_t>> seen;
    for (uint64_t mask = 0 ; mask < (uint64_t{1} << slots.size()) ; ++mask) {
        Graph g(n);
        for (std::size_t i = 0 ; i < slots.size() ; ++i)
            if (mask & (uint64_t{1} << i))
                g.add_edge(slots[i].first, slots[i].second);
        if (! is_connected(g))
            continue;

        uint64_t best = ~uint64_t{0};
        for (auto & p : perms) {
            uint64_t code = 0;
            for (std::size_t i = 0 ; i < slots.size() ; ++i) {
                auto [a, b] = slots[i];
                if (g.adjacent(p[a], p[b]))
                    code |= uint64_t{1} << i;
            }
            best = std::min(best, code);
        }
        seen.emplace(g.size(), best);
    }

    vector<Graph> result;
    for (auto & [edges, code] : seen) {
        Graph g(n);
        for (std::size_t i = 0 ; i < slots.size() ; ++i)
            if (code & (uint64_t{1} << i))
                g.add_edge(slots[i].first, slots[i].second);
        result.push_back(std::move(g));
    }
    return result;
}

auto strongdim::factor_pool(const CorpusSpec & spec, Rng & rng) -> vector<NamedGraph>
{
    vector<NamedGraph> result;
    bool trees_only = spec.filter == FactorFilter::trees;

    auto add = [&] (string name, Graph g) {
        if (g.order() < 2 || ! is_connected(g))
            return;
        if (trees_only && ! is_tree(g))
            return;
        result.push_back({ std::move(name), std::move(g) });
    };

    for (int n = 2 ; n <= spec.exhaustive_n ; ++n)
        for (auto & g : all_connected_graphs(n))
            add("g6:" + to_graph6(g), g);

    vector<Family> named{
        family::Path{ 6 }, family::Cycle{ 6 }, family::Cycle{ 7 }, family::Cycle{ 8 },
        family::Complete{ 6 }, family::Star{ 6 },
        family::CompleteMultipartite{ { 2, 3 } }, family::CompleteMultipartite{ { 2, 2, 2 } },
        family::CompleteMultipartite{ { 1, 2, 2 } },
        family::Grid{ 2, 3 }, family::Grid{ 3, 3 }, family::Grid{ 3, 4 }, family::Grid{ 4, 4 }, family::Hypercube{ 3 },
        family::GeneralizedTree{ { 3, 3, 2 }, 1 }, family::GeneralizedTree{ { 2, 4, 3 }, 2 },
        family::GeneralizedTree{ { 3, 4, 3, 3 }, 3 }
    };
    for (auto & f : named)
        add(family_name(f), generate(f));

    for (int i = 0 ; i < pool_random_graphs ; ++i) {
        int n = uniform_int(rng, spec.sample_min_n, spec.sample_max_n);
        if (trees_only) {
            auto g = random_tree(n, rng);
            add("random-tree:" + to_graph6(g), g);
        }
        else {
            double p = 0.25 + 0.35 * unit_real(rng);
            family::RandomConnected f{ n, p, rng() };
            add(family_name(f), generate(f));
        }
    }
    return result;
}
