/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/products.hh>
#include <strongdim/error.hh>

#include <string>

using namespace strongdim;

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

auto strongdim::product_kind_name(ProductKind kind) -> string_view
{
    switch (kind) {
        case ProductKind::strong:        return "strong";
        case ProductKind::cartesian:     return "cartesian";
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::cartesian_sum: return "sum";
    }
    return "?";
}

auto strongdim::parse_product_kind(string_view text) -> ProductKind
{
    if (text == "strong")
        return ProductKind::strong;
    if (text == "cartesian")
        return ProductKind::cartesian;
    if (text == "lexicographic" || text == "lex")
        return ProductKind::lexicographic;
    if (text == "sum" || text == "cartesian_sum" || text == "cartesian-sum")
        return ProductKind::cartesian_sum;
    throw Error(ErrorKind::parse_error, "unknown product kind '" + string(text) + "'");
}

auto ProductSpec::coordinate_labels() const -> vector<string>
{
    vector<string> result;
    result.reserve(order());
    for (Vertex id = 0 ; id < order() ; ++id) {
        auto [u, v] = decode(id);
        result.push_back(to_string(u) + "," + to_string(v));
    }
    return result;
}

auto strongdim::product_adjacent(ProductKind kind, const Graph & g, const Graph & h,
        Vertex a, Vertex b, Vertex c, Vertex d) -> bool
{
    bool g_edge = g.adjacent(a, c), h_edge = h.adjacent(b, d);
    switch (kind) {
        case ProductKind::cartesian:
            return (a == c && h_edge) || (g_edge && b == d);
        case ProductKind::strong:
            return (a == c && h_edge) || (g_edge && b == d) || (g_edge && h_edge);
        case ProductKind::lexicographic:
            return g_edge || (a == c && h_edge);
        case ProductKind::cartesian_sum:
            return g_edge || h_edge;
    }
    return false;
}

auto strongdim::product(ProductKind kind, const Graph & g, const Graph & h) -> Graph
{
    if (g.order() == 0 || h.order() == 0)
        throw Error(ErrorKind::invalid_argument, "product factors must be nonempty");

    ProductSpec spec{ kind, g.order(), h.order() };
    Graph result(spec.order());
    for (Vertex p = 0 ; p < spec.order() ; ++p) {
        auto [a, b] = spec.decode(p);
        for (Vertex q = p + 1 ; q < spec.order() ; ++q) {
            auto [c, d] = spec.decode(q);
            if (product_adjacent(kind, g, h, a, b, c, d))
                result.add_edge(p, q);
        }
    }
    return result;
}

auto strongdim::project(const ProductSpec & spec, const VertexSet & x, Side side) -> VertexSet
{
    if (x.universe() != spec.order())
        throw Error(ErrorKind::invalid_argument, "vertex set over " + to_string(x.universe())
                + " vertices is not from a product of order " + to_string(spec.order()));

    VertexSet result(side == Side::g ? spec.n1 : spec.n2);
    x.for_each([&] (Vertex id) {
        auto [u, v] = spec.decode(id);
        result.insert(side == Side::g ? u : v);
    });
    return result;
}

auto strongdim::cross(const ProductSpec & spec, const VertexSet & a, const VertexSet & b) -> VertexSet
{
    VertexSet result(spec.order());
    a.for_each([&] (Vertex u) {
        b.for_each([&] (Vertex v) { result.insert(spec.index(u, v)); });
    });
    return result;
}
