/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/generators.hh>
#include <strongdim/metrics.hh>
#include <strongdim/error.hh>

#include <charconv>
#include <limits>
#include <string>

using namespace strongdim;

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace
{
    auto invalid(const string & message) -> Error
    {
        return Error(ErrorKind::invalid_argument, message);
    }

    auto require_positive(int n, const char * what) -> void
    {
        if (n < 1)
            throw invalid(string(what) + " needs a positive vertex count");
    }

    auto build(const family::Path & f) -> Graph
    {
        require_positive(f.n, "path");
        Graph g(f.n);
        for (int v = 0 ; v + 1 < f.n ; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto build(const family::Cycle & f) -> Graph
    {
        if (f.n < 3)
            throw invalid("cycle needs at least 3 vertices");
        Graph g(f.n);
        for (int v = 0 ; v < f.n ; ++v)
            g.add_edge(v, (v + 1) % f.n);
        return g;
    }

    auto build(const family::Complete & f) -> Graph
    {
        require_positive(f.n, "complete");
        Graph g(f.n);
        for (int u = 0 ; u < f.n ; ++u)
            for (int v = u + 1 ; v < f.n ; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto build(const family::CompleteMultipartite & f) -> Graph
    {
        if (f.parts.size() < 2)
            throw invalid("complete multipartite needs at least 2 parts");
        vector<int> part_of;
        for (std::size_t i = 0 ; i < f.parts.size() ; ++i) {
            require_positive(f.parts[i], "multipartite part");
            part_of.insert(part_of.end(), f.parts[i], static_cast<int>(i));
        }
        Graph g(static_cast<int>(part_of.size()));
        for (int u = 0 ; u < g.order() ; ++u)
            for (int v = u + 1 ; v < g.order() ; ++v)
                if (part_of[u] != part_of[v])
                    g.add_edge(u, v);
        return g;
    }

    auto build(const family::Grid & f) -> Graph
    {
        require_positive(f.rows, "grid");
        require_positive(f.cols, "grid");
        Graph g(f.rows * f.cols);
        for (int r = 0 ; r < f.rows ; ++r)
            for (int c = 0 ; c < f.cols ; ++c) {
                int v = r * f.cols + c;
                if (c + 1 < f.cols)
                    g.add_edge(v, v + 1);
                if (r + 1 < f.rows)
                    g.add_edge(v, v + f.cols);
            }
        return g;
    }

    auto build(const family::Star & f) -> Graph
    {
        require_positive(f.n, "star");
        Graph g(f.n);
        for (int v = 1 ; v < f.n ; ++v)
            g.add_edge(0, v);
        return g;
    }

    auto build(const family::Hypercube & f) -> Graph
    {
        if (f.dimension < 0 || f.dimension > 12)
            throw invalid("hypercube dimension must be in [0, 12]");
        int n = 1 << f.dimension;
        Graph g(n);
        for (int v = 0 ; v < n ; ++v)
            for (int b = 0 ; b < f.dimension ; ++b)
                if (! (v & (1 << b)))
                    g.add_edge(v, v | (1 << b));
        return g;
    }

    auto build(const family::RandomConnected & f) -> Graph
    {
        require_positive(f.n, "random_connected");
        if (! (f.p > 0.0 && f.p <= 1.0))
            throw invalid("random_connected needs p in (0, 1]");
        Rng rng(f.seed);
        for (int attempt = 0 ; attempt < random_connected_retry_cap ; ++attempt) {
            auto g = random_graph(f.n, f.p, rng);
            if (is_connected(g))
                return g;
        }
        throw Error(ErrorKind::cap_exceeded, "random_connected: no connected draw in "
                + to_string(random_connected_retry_cap) + " attempts (p too small?)");
    }

    auto build(const family::GeneralizedTree & f) -> Graph
    {
        if (f.block_sizes.empty())
            throw invalid("generalized tree needs at least one block");
        for (auto b : f.block_sizes)
            if (b < 2)
                throw invalid("generalized tree blocks need at least 2 vertices");

        int n = f.block_sizes[0];
        for (std::size_t i = 1 ; i < f.block_sizes.size() ; ++i)
            n += f.block_sizes[i] - 1;

        Graph g(n);
        int used = f.block_sizes[0];
        for (int u = 0 ; u < used ; ++u)
            for (int v = u + 1 ; v < used ; ++v)
                g.add_edge(u, v);

        Rng rng(f.seed);
        for (std::size_t i = 1 ; i < f.block_sizes.size() ; ++i) {
            vector<int> block{ static_cast<int>(uniform_below(rng, used)) };
            for (int k = 1 ; k < f.block_sizes[i] ; ++k)
                block.push_back(used++);
            for (std::size_t a = 0 ; a < block.size() ; ++a)
                for (std::size_t b = a + 1 ; b < block.size() ; ++b)
                    g.add_edge(block[a], block[b]);
        }
        return g;
    }

    auto parse_int(string_view text) -> int
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::parse_error, "expected an integer, got '" + string(text) + "'");
        return value;
    }

    auto parse_u64(string_view text) -> std::uint64_t
    {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::parse_error, "expected a seed, got '" + string(text) + "'");
        return value;
    }

    auto parse_double(string_view text) -> double
    {
        double value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw Error(ErrorKind::parse_error, "expected a probability, got '" + string(text) + "'");
        return value;
    }

    auto split(string_view text, char sep) -> vector<string_view>
    {
        vector<string_view> result;
        while (true) {
            auto pos = text.find(sep);
            result.push_back(text.substr(0, pos));
            if (pos == string_view::npos)
                break;
            text.remove_prefix(pos + 1);
        }
        return result;
    }

    auto parse_int_list(string_view text) -> vector<int>
    {
        vector<int> result;
        for (auto part : split(text, ','))
            result.push_back(parse_int(part));
        return result;
    }

    auto join(const vector<int> & values) -> string
    {
        string result;
        for (std::size_t i = 0 ; i < values.size() ; ++i)
            result += (i ? "," : "") + to_string(values[i]);
        return result;
    }
}

auto strongdim::generate(const Family & spec) -> Graph
{
    return std::visit([] (const auto & f) { return build(f); }, spec);
}

auto strongdim::parse_family(string_view text) -> Family
{
    auto colon = text.find(':');
    if (colon == string_view::npos)
        throw Error(ErrorKind::parse_error, "generator spec must look like family:params, got '" + string(text) + "'");
    auto name = text.substr(0, colon);
    auto params = text.substr(colon + 1);

    std::uint64_t seed = 0;
    if (auto at = params.find('@') ; at != string_view::npos) {
        seed = parse_u64(params.substr(at + 1));
        params = params.substr(0, at);
    }

    if (name == "path")
        return family::Path{ parse_int(params) };
    if (name == "cycle")
        return family::Cycle{ parse_int(params) };
    if (name == "complete")
        return family::Complete{ parse_int(params) };
    if (name == "star")
        return family::Star{ parse_int(params) };
    if (name == "hypercube")
        return family::Hypercube{ parse_int(params) };
    if (name == "kpartite" || name == "multipartite")
        return family::CompleteMultipartite{ parse_int_list(params) };
    if (name == "gtree")
        return family::GeneralizedTree{ parse_int_list(params), seed };
    if (name == "grid") {
        auto dims = split(params, 'x');
        if (dims.size() != 2)
            throw Error(ErrorKind::parse_error, "grid spec must be grid:RxC");
        return family::Grid{ parse_int(dims[0]), parse_int(dims[1]) };
    }
    if (name == "random") {
        auto parts = split(params, ',');
        if (parts.size() != 2)
            throw Error(ErrorKind::parse_error, "random spec must be random:n,p[@seed]");
        return family::RandomConnected{ parse_int(parts[0]), parse_double(parts[1]), seed };
    }
    throw Error(ErrorKind::parse_error, "unknown graph family '" + string(name) + "'");
}

auto strongdim::family_name(const Family & spec) -> string
{
    struct Namer
    {
        auto operator() (const family::Path & f) const -> string { return "path:" + to_string(f.n); }
        auto operator() (const family::Cycle & f) const -> string { return "cycle:" + to_string(f.n); }
        auto operator() (const family::Complete & f) const -> string { return "complete:" + to_string(f.n); }
        auto operator() (const family::CompleteMultipartite & f) const -> string { return "kpartite:" + join(f.parts); }
        auto operator() (const family::Grid & f) const -> string { return "grid:" + to_string(f.rows) + "x" + to_string(f.cols); }
        auto operator() (const family::Star & f) const -> string { return "star:" + to_string(f.n); }
        auto operator() (const family::Hypercube & f) const -> string { return "hypercube:" + to_string(f.dimension); }
        auto operator() (const family::RandomConnected & f) const -> string
        {
            char buf[32];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), f.p);
            return "random:" + to_string(f.n) + "," + string(buf, ptr) + "@" + to_string(f.seed);
        }
        auto operator() (const family::GeneralizedTree & f) const -> string
        {
            return "gtree:" + join(f.block_sizes) + "@" + to_string(f.seed);
        }
    };
    return std::visit(Namer{}, spec);
}

auto strongdim::uniform_below(Rng & rng, std::uint64_t bound) -> std::uint64_t
{
    if (bound == 0)
        throw invalid("uniform_below needs a positive bound");
    // rejection on the top partial bucket keeps the draw exactly uniform
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

auto strongdim::uniform_int(Rng & rng, int lo, int hi) -> int
{
    return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

auto strongdim::unit_real(Rng & rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

auto strongdim::random_graph(int n, double p, Rng & rng) -> Graph
{
    Graph g(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            if (unit_real(rng) < p)
                g.add_edge(u, v);
    return g;
}

auto strongdim::random_tree(int n, Rng & rng) -> Graph
{
    Graph g(n);
    for (int v = 1 ; v < n ; ++v)
        g.add_edge(v, static_cast<int>(uniform_below(rng, v)));
    return g;
}
