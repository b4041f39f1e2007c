/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_FORMULAS_HH
#define STRONGDIM_GUARD_FORMULAS_HH 1

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

// Closed forms and bounds for dim_s of strong products, as integer
// arithmetic only. Nothing here touches a graph, so the verifier can set a
// formula against a value computed from scratch.
//
// Naming: n1, n2 are the factor orders of G and H; dim_g, dim_h their strong
// metric dimensions.

namespace strongdim::formula
{
    using Value = std::int64_t;

    auto general_lower(Value n1, Value n2, Value dim_g, Value dim_h) -> Value;
    auto general_upper(Value n1, Value n2, Value dim_g, Value dim_h) -> Value;

    /// Exact value when G's strong resolving graph is a C-graph.
    auto cgraph_exact(Value n1, Value n2, Value dim_g, Value dim_h) -> Value;

    auto complete_factor(Value n1, Value n2, Value dim_h) -> Value;
    /// G complete k-partite with at most one part of size 1.
    auto kpartite_factor(Value n1, Value n2, Value k, Value dim_h) -> Value;
    /// G a generalized tree with c cut vertices.
    auto generalized_tree_factor(Value n1, Value n2, Value c, Value dim_h) -> Value;
    /// G a tree with l leaves.
    auto tree_factor(Value n1, Value n2, Value leaves, Value dim_h) -> Value;
    auto antipodal_factor(Value n1, Value n2, Value dim_h) -> Value;
    auto grid_factor(Value n1, Value n2, Value dim_h) -> Value;

    /// Lower bound when G's strong resolving graph is a C1-graph.
    auto c1_lower(Value n1, Value n2, Value dim_g, Value dim_h) -> Value;

    /// Bounds for C_{2r+1} ⊠ H, H of order n.
    auto odd_cycle_lower(Value n, Value r, Value dim_h) -> Value;
    auto odd_cycle_upper(Value n, Value r, Value dim_h) -> Value;

    /// Bounds for C_{2r+1} ⊠ C_{2t+1}, 1 <= r <= t.
    auto odd_odd_lower(Value r, Value t) -> Value;
    auto odd_odd_upper(Value r, Value t) -> Value;

    /// Independence number of C_{2r+1} ⊠ C_{2t+1}, 1 <= r <= t.
    auto odd_odd_independence(Value r, Value t) -> Value;

    /// dim_s(C_3 ⊠ C_{2t+1}).
    auto c3_exact(Value t) -> Value;

    enum class Kind
    {
        general_lower, general_upper, cgraph_exact,
        complete_factor, kpartite_factor, generalized_tree_factor, tree_factor,
        antipodal_factor, grid_factor,
        c1_lower, odd_cycle_lower, odd_cycle_upper,
        odd_odd_lower, odd_odd_upper, odd_odd_independence, c3_exact
    };

    struct Params
    {
        std::optional<Value> n1, n2, dim_g, dim_h, k, c, l, r, t;
    };

    auto kind_name(Kind kind) -> std::string_view;
    auto parse_kind(std::string_view text) -> Kind;
    auto all_kinds() -> std::vector<Kind>;

    /// Dispatches on kind; a missing parameter is an invalid_argument error.
    auto evaluate(Kind kind, const Params & params) -> Value;
}

#endif
