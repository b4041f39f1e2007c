/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_CORPUS_HH
#define STRONGDIM_GUARD_CORPUS_HH 1

#include <strongdim/generators.hh>
#include <strongdim/graph.hh>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strongdim
{
    enum class FactorFilter { all, trees };

    /// Knobs for the instance families the claims run over. Together with a
    /// seed this fully determines every instance.
    struct CorpusSpec
    {
        /// All connected graphs up to this order, up to isomorphism (max 6).
        int exhaustive_n = 5;
        /// Seeded factor pairs per pair claim, and seeded pairs per
        /// independence law.
        int samples = 100;
        int sample_min_n = 6;
        int sample_max_n = 8;
        /// Strong products larger than this are never built.
        int max_product = 400;
        /// Order cap for the arbitrary (possibly disconnected) graphs used by
        /// the independence laws.
        int beta_law_max_n = 7;
        /// Seeded connected graphs for the dim_s oracle comparison.
        int oracle_samples = 200;
        int oracle_min_n = 6;
        int oracle_max_n = 9;
        /// t range for C3 ⊠ C_{2t+1}.
        int t_max = 5;
        /// r, t range for the odd-cycle pair claims.
        int odd_max = 4;
        std::optional<int> r, t;
        FactorFilter filter = FactorFilter::all;

        auto to_json() const -> nlohmann::json;
    };

    struct NamedGraph
    {
        std::string name;
        Graph graph;
    };

    /// Connected graphs on exactly n vertices, one per isomorphism class, in
    /// a fixed order (edge count, then canonical code).
    auto all_connected_graphs(int n) -> std::vector<Graph>;

    /// Small connected factors: the exhaustive classes, the named families
    /// and seeded random graphs, filtered by spec.filter.
    auto factor_pool(const CorpusSpec & spec, Rng & rng) -> std::vector<NamedGraph>;

    /// Stable 64-bit FNV-1a, used to derive per-claim seeds.
    auto stable_hash(std::string_view text) -> std::uint64_t;
}

#endif
