/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/vertex_set.hh>

using namespace strongdim;

VertexSet::VertexSet(int universe) :
    _universe(universe),
    _words((universe + bits_per_word - 1) / bits_per_word, 0)
{
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) :
    VertexSet(universe)
{
    for (auto v : members)
        insert(v);
}

auto VertexSet::full(int universe) -> VertexSet
{
    VertexSet result(universe);
    for (auto & w : result._words)
        w = ~std::uint64_t{0};
    result.trim();
    return result;
}

auto VertexSet::from_members(int universe, const std::vector<Vertex> & members) -> VertexSet
{
    VertexSet result(universe);
    for (auto v : members)
        result.insert(v);
    return result;
}

auto VertexSet::trim() -> void
{
    int spare = static_cast<int>(_words.size()) * bits_per_word - _universe;
    if (spare > 0 && ! _words.empty())
        _words.back() &= (~std::uint64_t{0}) >> spare;
}

auto VertexSet::count() const -> int
{
    int result = 0;
    for (auto w : _words)
        result += std::popcount(w);
    return result;
}

auto VertexSet::empty() const -> bool
{
    for (auto w : _words)
        if (w)
            return false;
    return true;
}

auto VertexSet::first() const -> Vertex
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w])
            return static_cast<Vertex>(w * bits_per_word + std::countr_zero(_words[w]));
    return -1;
}

auto VertexSet::next(Vertex v) const -> Vertex
{
    int start = v + 1;
    if (start >= _universe)
        return -1;
    std::size_t w = start / bits_per_word;
    std::uint64_t bits = _words[w] & ((~std::uint64_t{0}) << (start % bits_per_word));
    while (true) {
        if (bits)
            return static_cast<Vertex>(w * bits_per_word + std::countr_zero(bits));
        if (++w >= _words.size())
            return -1;
        bits = _words[w];
    }
}

auto VertexSet::members() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    result.reserve(count());
    for_each([&] (Vertex v) { result.push_back(v); });
    return result;
}

auto VertexSet::intersects(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w] & other._words[w])
            return true;
    return false;
}

auto VertexSet::is_subset_of(const VertexSet & other) const -> bool
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        if (_words[w] & ~other._words[w])
            return false;
    return true;
}

auto VertexSet::intersection_count(const VertexSet & other) const -> int
{
    int result = 0;
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        result += std::popcount(_words[w] & other._words[w]);
    return result;
}

auto VertexSet::complement() const -> VertexSet
{
    VertexSet result = *this;
    for (auto & w : result._words)
        w = ~w;
    result.trim();
    return result;
}

auto VertexSet::operator&= (const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] &= other._words[w];
    return *this;
}

auto VertexSet::operator|= (const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] |= other._words[w];
    return *this;
}

auto VertexSet::operator-= (const VertexSet & other) -> VertexSet &
{
    for (std::size_t w = 0 ; w < _words.size() ; ++w)
        _words[w] &= ~other._words[w];
    return *this;
}
