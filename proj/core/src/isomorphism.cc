/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/isomorphism.hh>
#include <strongdim/error.hh>

#include <algorithm>
#include <map>
#include <string>

using namespace strongdim;

using std::map;
using std::optional;
using std::pair;
using std::to_string;
using std::vector;

namespace
{
    /// Stable 1-WL colouring of a and b together, so that equal colours mean
    /// the same thing on both sides.
    auto refine(const Graph & a, const Graph & b) -> pair<vector<int>, vector<int>>
    {
        int na = a.order(), nb = b.order();
        vector<int> colour(na + nb);
        for (int v = 0 ; v < na ; ++v)
            colour[v] = a.degree(v);
        for (int v = 0 ; v < nb ; ++v)
            colour[na + v] = b.degree(v);

        auto neighbours_of = [&] (int v) {
            vector<int> result;
            if (v < na)
                a.neighbourhood(v).for_each([&] (Vertex w) { result.push_back(colour[w]); });
            else
                b.neighbourhood(v - na).for_each([&] (Vertex w) { result.push_back(colour[na + w]); });
            std::sort(result.begin(), result.end());
            return result;
        };

        int classes = -1;
        while (true) {
            map<pair<int, vector<int>>, int> signature;
            vector<pair<int, vector<int>>> keys(na + nb);
            for (int v = 0 ; v < na + nb ; ++v) {
                keys[v] = { colour[v], neighbours_of(v) };
                signature.emplace(keys[v], 0);
            }
            int next = 0;
            for (auto & [key, id] : signature)
                id = next++;
            for (int v = 0 ; v < na + nb ; ++v)
                colour[v] = signature[keys[v]];
            if (next == classes)
                break;
            classes = next;
        }

        return { vector<int>(colour.begin(), colour.begin() + na), vector<int>(colour.begin() + na, colour.end()) };
    }

    struct Matcher
    {
        const Graph & a;
        const Graph & b;
        const vector<int> & colour_a;
        const vector<int> & colour_b;
        vector<Vertex> mapping;
        vector<bool> used;
        vector<Vertex> order;

        auto consistent(Vertex x, Vertex y, std::size_t depth) const -> bool
        {
            for (std::size_t i = 0 ; i < depth ; ++i) {
                Vertex xp = order[i];
                if (a.adjacent(x, xp) != b.adjacent(y, mapping[xp]))
                    return false;
            }
            return true;
        }

        auto search(std::size_t depth) -> bool
        {
            if (depth == order.size())
                return true;
            Vertex x = order[depth];
            for (Vertex y = 0 ; y < b.order() ; ++y) {
                if (used[y] || colour_b[y] != colour_a[x] || ! consistent(x, y, depth))
                    continue;
                mapping[x] = y;
                used[y] = true;
                if (search(depth + 1))
                    return true;
                used[y] = false;
            }
            mapping[x] = -1;
            return false;
        }
    };

    /// Vertices of a in an order that keeps each new vertex attached to the
    /// already placed ones where possible, preferring small colour classes.
    auto search_order(const Graph & a, const vector<int> & colour) -> vector<Vertex>
    {
        int n = a.order();
        map<int, int> class_size;
        for (auto c : colour)
            ++class_size[c];

        vector<Vertex> result;
        vector<int> placed_neighbours(n, 0);
        vector<bool> placed(n, false);
        for (int step = 0 ; step < n ; ++step) {
            Vertex best = -1;
            for (Vertex v = 0 ; v < n ; ++v) {
                if (placed[v])
                    continue;
                if (best == -1
                        || placed_neighbours[v] > placed_neighbours[best]
                        || (placed_neighbours[v] == placed_neighbours[best] && class_size[colour[v]] < class_size[colour[best]]))
                    best = v;
            }
            placed[best] = true;
            result.push_back(best);
            a.neighbourhood(best).for_each([&] (Vertex w) { ++placed_neighbours[w]; });
        }
        return result;
    }
}

auto strongdim::find_isomorphism(const Graph & a, const Graph & b, int cap) -> optional<vector<Vertex>>
{
    if (a.order() > cap || b.order() > cap)
        throw Error(ErrorKind::cap_exceeded, "isomorphism check limited to " + to_string(cap)
                + " vertices, got " + to_string(std::max(a.order(), b.order())));

    if (a.order() != b.order() || a.size() != b.size() || degree_sequence(a) != degree_sequence(b))
        return std::nullopt;

    auto [colour_a, colour_b] = refine(a, b);
    auto sorted_a = colour_a, sorted_b = colour_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b)
        return std::nullopt;

    Matcher matcher{ a, b, colour_a, colour_b, vector<Vertex>(a.order(), -1), vector<bool>(b.order(), false),
        search_order(a, colour_a) };
    if (! matcher.search(0))
        return std::nullopt;
    return matcher.mapping;
}

auto strongdim::graphs_isomorphic(const Graph & a, const Graph & b, int cap) -> bool
{
    return find_isomorphism(a, b, cap).has_value();
}
