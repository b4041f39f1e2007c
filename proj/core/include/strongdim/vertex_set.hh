/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef STRONGDIM_GUARD_VERTEX_SET_HH
#define STRONGDIM_GUARD_VERTEX_SET_HH 1

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace strongdim
{
    using Vertex = int;

    /// A subset of the vertex ids [0, universe) of some graph, stored as a
    /// packed bitset. Used for adjacency rows, covers, independent sets,
    /// boundaries and bases alike.
    class VertexSet
    {
        private:
            int _universe = 0;
            std::vector<std::uint64_t> _words;

            auto trim() -> void;

        public:
            static constexpr int bits_per_word = 64;

            VertexSet() = default;
            explicit VertexSet(int universe);
            VertexSet(int universe, std::initializer_list<Vertex> members);

            static auto full(int universe) -> VertexSet;
            static auto from_members(int universe, const std::vector<Vertex> & members) -> VertexSet;

            auto universe() const -> int { return _universe; }

            auto contains(Vertex v) const -> bool
            {
                return (_words[v / bits_per_word] >> (v % bits_per_word)) & 1;
            }

            auto insert(Vertex v) -> void
            {
                _words[v / bits_per_word] |= std::uint64_t{1} << (v % bits_per_word);
            }

            auto erase(Vertex v) -> void
            {
                _words[v / bits_per_word] &= ~(std::uint64_t{1} << (v % bits_per_word));
            }

            auto count() const -> int;
            auto empty() const -> bool;

            /// Lowest member, or -1 when empty.
            auto first() const -> Vertex;

            /// Lowest member greater than v, or -1.
            auto next(Vertex v) const -> Vertex;

            auto members() const -> std::vector<Vertex>;

            auto intersects(const VertexSet & other) const -> bool;
            auto is_subset_of(const VertexSet & other) const -> bool;
            auto intersection_count(const VertexSet & other) const -> int;

            /// Members of the universe not in this set.
            auto complement() const -> VertexSet;

            auto operator&= (const VertexSet & other) -> VertexSet &;
            auto operator|= (const VertexSet & other) -> VertexSet &;
            /// Set difference.
            auto operator-= (const VertexSet & other) -> VertexSet &;

            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            auto operator== (const VertexSet & other) const -> bool = default;

            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (std::size_t w = 0 ; w < _words.size() ; ++w) {
                    std::uint64_t bits = _words[w];
                    while (bits) {
                        int b = std::countr_zero(bits);
                        bits &= bits - 1;
                        f(static_cast<Vertex>(w * bits_per_word + b));
                    }
                }
            }
    };
}

#endif
