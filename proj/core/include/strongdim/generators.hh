/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_GENERATORS_HH
#define STRONGDIM_GUARD_GENERATORS_HH 1

#include <strongdim/graph.hh>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace strongdim
{
    namespace family
    {
        struct Path { int n; };
        struct Cycle { int n; };
        struct Complete { int n; };
        struct CompleteMultipartite { std::vector<int> parts; };
        /// P_rows □ P_cols, built directly.
        struct Grid { int rows, cols; };
        /// Star on n vertices, centre 0.
        struct Star { int n; };
        struct Hypercube { int dimension; };
        /// Seeded Erdős–Rényi draws, retried until connected.
        struct RandomConnected { int n; double p; std::uint64_t seed; };
        /// Complete blocks chained at uniformly chosen existing vertices.
        struct GeneralizedTree { std::vector<int> block_sizes; std::uint64_t seed; };
    }

    using Family = std::variant<
        family::Path, family::Cycle, family::Complete, family::CompleteMultipartite,
        family::Grid, family::Star, family::Hypercube, family::RandomConnected,
        family::GeneralizedTree>;

    inline constexpr int random_connected_retry_cap = 10'000;

    auto generate(const Family & spec) -> Graph;

    /// Parses the `name:params` mini-language, e.g. `cycle:7`, `kpartite:2,2,3`,
    /// `grid:3x4`, `random:8,0.4@42`, `gtree:3,3,4@7`.
    auto parse_family(std::string_view text) -> Family;

    auto family_name(const Family & spec) -> std::string;

    /// Portable RNG helpers: the standard distributions are implementation
    /// defined, and corpora must be identical across platforms.
    using Rng = std::mt19937_64;

    auto uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t;
    auto uniform_int(Rng & rng, int lo, int hi) -> int;
    auto unit_real(Rng & rng) -> double;

    /// G(n, p) without the connectivity requirement.
    auto random_graph(int n, double p, Rng & rng) -> Graph;

    auto random_tree(int n, Rng & rng) -> Graph;
}

#endif
