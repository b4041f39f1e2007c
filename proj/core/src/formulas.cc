/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/formulas.hh>
#include <strongdim/error.hh>

#include <algorithm>
#include <array>
#include <string>

using namespace strongdim;
using namespace strongdim::formula;

using std::string;
using std::string_view;
using std::to_string;

namespace
{
    auto domain(bool ok, const string & message) -> void
    {
        if (! ok)
            throw Error(ErrorKind::invalid_argument, "formula domain: " + message);
    }

    auto factor(Value n, Value dim, const char * which) -> void
    {
        domain(n >= 2, string(which) + " must be nontrivial (order >= 2), got " + to_string(n));
        domain(dim >= 1 && dim <= n - 1, string("dim_s of ") + which + " must lie in [1, order-1], got " + to_string(dim));
    }

    auto order(Value n, const char * which) -> void
    {
        domain(n >= 2, string(which) + " must be nontrivial (order >= 2), got " + to_string(n));
    }

    auto odd_pair(Value r, Value t) -> void
    {
        domain(r >= 1 && r <= t, "needs 1 <= r <= t, got r=" + to_string(r) + ", t=" + to_string(t));
    }

    /// Shared shape of the exact corollary values: x plays dim_s(G).
    auto with_g_dimension(Value n1, Value n2, Value x, Value dim_h) -> Value
    {
        return n2 * x + n1 * dim_h - x * dim_h;
    }

    constexpr std::array names{
        std::pair{ Kind::general_lower, "general_lower" },
        std::pair{ Kind::general_upper, "general_upper" },
        std::pair{ Kind::cgraph_exact, "cgraph_exact" },
        std::pair{ Kind::complete_factor, "complete_factor" },
        std::pair{ Kind::kpartite_factor, "kpartite_factor" },
        std::pair{ Kind::generalized_tree_factor, "generalized_tree_factor" },
        std::pair{ Kind::tree_factor, "tree_factor" },
        std::pair{ Kind::antipodal_factor, "antipodal_factor" },
        std::pair{ Kind::grid_factor, "grid_factor" },
        std::pair{ Kind::c1_lower, "c1_lower" },
        std::pair{ Kind::odd_cycle_lower, "odd_cycle_lower" },
        std::pair{ Kind::odd_cycle_upper, "odd_cycle_upper" },
        std::pair{ Kind::odd_odd_lower, "odd_odd_lower" },
        std::pair{ Kind::odd_odd_upper, "odd_odd_upper" },
        std::pair{ Kind::odd_odd_independence, "odd_odd_independence" },
        std::pair{ Kind::c3_exact, "c3_exact" }
    };
}

auto formula::general_lower(Value n1, Value n2, Value dim_g, Value dim_h) -> Value
{
    factor(n1, dim_g, "G");
    factor(n2, dim_h, "H");
    return std::max(n2 * dim_g, n1 * dim_h);
}

auto formula::general_upper(Value n1, Value n2, Value dim_g, Value dim_h) -> Value
{
    factor(n1, dim_g, "G");
    factor(n2, dim_h, "H");
    return n2 * dim_g + n1 * dim_h - dim_g * dim_h;
}

auto formula::cgraph_exact(Value n1, Value n2, Value dim_g, Value dim_h) -> Value
{
    return general_upper(n1, n2, dim_g, dim_h);
}

auto formula::complete_factor(Value n1, Value n2, Value dim_h) -> Value
{
    order(n1, "K_n1");
    factor(n2, dim_h, "H");
    return with_g_dimension(n1, n2, n1 - 1, dim_h);
}

auto formula::kpartite_factor(Value n1, Value n2, Value k, Value dim_h) -> Value
{
    order(n1, "G");
    domain(k >= 2 && k < n1, "k-partite needs 2 <= k < n1, got k=" + to_string(k));
    factor(n2, dim_h, "H");
    return with_g_dimension(n1, n2, n1 - k, dim_h);
}

auto formula::generalized_tree_factor(Value n1, Value n2, Value c, Value dim_h) -> Value
{
    order(n1, "G");
    domain(c >= 0 && c <= n1 - 2, "cut vertex count must lie in [0, n1-2], got " + to_string(c));
    factor(n2, dim_h, "H");
    return with_g_dimension(n1, n2, n1 - c - 1, dim_h);
}

auto formula::tree_factor(Value n1, Value n2, Value leaves, Value dim_h) -> Value
{
    order(n1, "G");
    domain(leaves >= 2 && leaves <= n1, "leaf count must lie in [2, n1], got " + to_string(leaves));
    factor(n2, dim_h, "H");
    return with_g_dimension(n1, n2, leaves - 1, dim_h);
}

auto formula::antipodal_factor(Value n1, Value n2, Value dim_h) -> Value
{
    order(n1, "G");
    domain(n1 % 2 == 0, "2-antipodal order must be even, got " + to_string(n1));
    factor(n2, dim_h, "H");
    return n2 * n1 / 2 + n1 * dim_h - n1 / 2 * dim_h;
}

auto formula::grid_factor(Value n1, Value n2, Value dim_h) -> Value
{
    domain(n1 >= 4, "grid order must be at least 4, got " + to_string(n1));
    factor(n2, dim_h, "H");
    return with_g_dimension(n1, n2, 3, dim_h);
}

auto formula::c1_lower(Value n1, Value n2, Value dim_g, Value dim_h) -> Value
{
    factor(n1, dim_g, "G");
    factor(n2, dim_h, "H");
    return n1 * (dim_h - 1) + dim_g * (n2 - dim_h + 1);
}

auto formula::odd_cycle_lower(Value n, Value r, Value dim_h) -> Value
{
    domain(r >= 1, "needs r >= 1, got " + to_string(r));
    factor(n, dim_h, "H");
    return n * (r + 1) + r * (dim_h - 1);
}

auto formula::odd_cycle_upper(Value n, Value r, Value dim_h) -> Value
{
    domain(r >= 1, "needs r >= 1, got " + to_string(r));
    factor(n, dim_h, "H");
    return n * (r + 1) + r * dim_h;
}

auto formula::odd_odd_lower(Value r, Value t) -> Value
{
    odd_pair(r, t);
    return 3 * r * t + 2 * r + 2 * t + 1 - r / 2;
}

auto formula::odd_odd_upper(Value r, Value t) -> Value
{
    odd_pair(r, t);
    return 3 * r * t + 2 * r + 2 * t + 1;
}

auto formula::odd_odd_independence(Value r, Value t) -> Value
{
    odd_pair(r, t);
    return r * t + r / 2;
}

auto formula::c3_exact(Value t) -> Value
{
    domain(t >= 1, "needs t >= 1, got " + to_string(t));
    return 5 * t + 3;
}

auto formula::kind_name(Kind kind) -> string_view
{
    for (auto & [k, name] : names)
        if (k == kind)
            return name;
    return "?";
}

auto formula::parse_kind(string_view text) -> Kind
{
    for (auto & [k, name] : names)
        if (text == name)
            return k;
    throw Error(ErrorKind::parse_error, "unknown formula '" + string(text) + "'");
}

auto formula::all_kinds() -> std::vector<Kind>
{
    std::vector<Kind> result;
    for (auto & [k, name] : names)
        result.push_back(k);
    return result;
}

auto formula::evaluate(Kind kind, const Params & p) -> Value
{
    auto need = [&] (const std::optional<Value> & v, const char * name) -> Value {
        if (! v)
            throw Error(ErrorKind::invalid_argument, string(kind_name(kind)) + " needs parameter " + name);
        return *v;
    };

    switch (kind) {
        case Kind::general_lower:
            return general_lower(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_g, "dim_g"), need(p.dim_h, "dim_h"));
        case Kind::general_upper:
            return general_upper(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_g, "dim_g"), need(p.dim_h, "dim_h"));
        case Kind::cgraph_exact:
            return cgraph_exact(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_g, "dim_g"), need(p.dim_h, "dim_h"));
        case Kind::complete_factor:
            return complete_factor(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_h, "dim_h"));
        case Kind::kpartite_factor:
            return kpartite_factor(need(p.n1, "n1"), need(p.n2, "n2"), need(p.k, "k"), need(p.dim_h, "dim_h"));
        case Kind::generalized_tree_factor:
            return generalized_tree_factor(need(p.n1, "n1"), need(p.n2, "n2"), need(p.c, "c"), need(p.dim_h, "dim_h"));
        case Kind::tree_factor:
            return tree_factor(need(p.n1, "n1"), need(p.n2, "n2"), need(p.l, "l"), need(p.dim_h, "dim_h"));
        case Kind::antipodal_factor:
            return antipodal_factor(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_h, "dim_h"));
        case Kind::grid_factor:
            return grid_factor(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_h, "dim_h"));
        case Kind::c1_lower:
            return c1_lower(need(p.n1, "n1"), need(p.n2, "n2"), need(p.dim_g, "dim_g"), need(p.dim_h, "dim_h"));
        case Kind::odd_cycle_lower:
            return odd_cycle_lower(need(p.n2, "n2"), need(p.r, "r"), need(p.dim_h, "dim_h"));
        case Kind::odd_cycle_upper:
            return odd_cycle_upper(need(p.n2, "n2"), need(p.r, "r"), need(p.dim_h, "dim_h"));
        case Kind::odd_odd_lower:
            return odd_odd_lower(need(p.r, "r"), need(p.t, "t"));
        case Kind::odd_odd_upper:
            return odd_odd_upper(need(p.r, "r"), need(p.t, "t"));
        case Kind::odd_odd_independence:
            return odd_odd_independence(need(p.r, "r"), need(p.t, "t"));
        case Kind::c3_exact:
            return c3_exact(need(p.t, "t"));
    }
    throw Error(ErrorKind::invalid_argument, "unhandled formula kind");
}
