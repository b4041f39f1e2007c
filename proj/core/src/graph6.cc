/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <strongdim/graph6.hh>
#include <strongdim/error.hh>

using namespace strongdim;

using std::string;
using std::string_view;
using std::to_string;

namespace
{
    auto malformed(const string & message) -> Error
    {
        return Error(ErrorKind::parse_error, "graph6: " + message);
    }

    auto decode_byte(char c) -> int
    {
        int value = static_cast<unsigned char>(c);
        if (value < 63 || value > 126)
            throw malformed("byte " + to_string(value) + " outside printable range 63..126");
        return value - 63;
    }
}

auto strongdim::from_graph6(string_view text) -> Graph
{
    constexpr string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);

    if (text.empty())
        throw malformed("empty input");

    int n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = decode_byte(text[0]);
        pos = 1;
    }
    else {
        if (text.size() >= 2 && text[1] == '~')
            throw malformed("orders of 2^18 or more are not supported");
        if (text.size() < 4)
            throw malformed("truncated size header");
        for (std::size_t i = 1 ; i <= 3 ; ++i)
            n = (n << 6) | decode_byte(text[i]);
        if (n < 63)
            throw malformed("non-canonical long size header");
        pos = 4;
    }

    std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos < bytes)
        throw malformed("truncated bit stream: expected " + to_string(bytes) + " data bytes, got "
                + to_string(text.size() - pos));
    if (text.size() - pos > bytes)
        throw malformed("trailing garbage after " + to_string(bytes) + " data bytes");

    Graph g(n);
    std::size_t k = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u, ++k) {
            int byte = decode_byte(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1)
                g.add_edge(u, v);
        }

    if (bits % 6 != 0) {
        int last = decode_byte(text[pos + bytes - 1]);
        int padding = static_cast<int>(6 - bits % 6);
        if (last & ((1 << padding) - 1))
            throw malformed("nonzero padding bits");
    }

    return g;
}

auto strongdim::to_graph6(const Graph & g) -> string
{
    int n = g.order();
    if (n > graph6_max_order)
        throw Error(ErrorKind::cap_exceeded, "graph6: order " + to_string(n) + " too large");

    string result;
    if (n < 63)
        result += static_cast<char>(n + 63);
    else {
        result += '~';
        result += static_cast<char>(((n >> 12) & 63) + 63);
        result += static_cast<char>(((n >> 6) & 63) + 63);
        result += static_cast<char>((n & 63) + 63);
    }

    int current = 0, filled = 0;
    for (int v = 1 ; v < n ; ++v)
        for (int u = 0 ; u < v ; ++u) {
            current = (current << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                result += static_cast<char>(current + 63);
                current = filled = 0;
            }
        }
    if (filled > 0)
        result += static_cast<char>((current << (6 - filled)) + 63);

    return result;
}
