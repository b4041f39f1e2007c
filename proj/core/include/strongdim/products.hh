/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_PRODUCTS_HH
#define STRONGDIM_GUARD_PRODUCTS_HH 1

#include <strongdim/graph.hh>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace strongdim
{
    enum class ProductKind
    {
        strong,
        cartesian,
        lexicographic,
        cartesian_sum
    };

    auto product_kind_name(ProductKind kind) -> std::string_view;

    /// Accepts strong, cartesian, lexicographic (or lex), sum (or cartesian_sum).
    auto parse_product_kind(std::string_view text) -> ProductKind;

    /// Row-major coordinate convention: (u, v) has id u * n2 + v.
    struct ProductSpec
    {
        ProductKind kind;
        int n1, n2;

        auto order() const -> int { return n1 * n2; }
        auto index(Vertex u, Vertex v) const -> Vertex { return u * n2 + v; }
        auto decode(Vertex id) const -> std::pair<Vertex, Vertex> { return { id / n2, id % n2 }; }

        /// "u,v" for every product vertex, for DOT and report output.
        auto coordinate_labels() const -> std::vector<std::string>;
    };

    /// Whether (a, b) ~ (c, d) in the given product, from factor adjacency.
    auto product_adjacent(ProductKind kind, const Graph & g, const Graph & h,
            Vertex a, Vertex b, Vertex c, Vertex d) -> bool;

    /// Product in (g, h) order; the lexicographic product is not symmetrised.
    auto product(ProductKind kind, const Graph & g, const Graph & h) -> Graph;

    enum class Side { g, h };

    /// Coordinate projection of a product vertex set. X must be drawn from a
    /// graph with spec's vertex count.
    auto project(const ProductSpec & spec, const VertexSet & x, Side side) -> VertexSet;

    /// Product vertex set A x B.
    auto cross(const ProductSpec & spec, const VertexSet & a, const VertexSet & b) -> VertexSet;
}

#endif
