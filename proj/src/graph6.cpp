#include "satkit/graph6.hpp"

#include <stdexcept>

namespace satkit {

namespace {

constexpr int kOffset = 63;  // printable range is 63..126

void append_group(std::string& out, int group) { out.push_back(static_cast<char>(group + kOffset)); }

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        append_group(out, n);
    } else {
        out.push_back('~');
        append_group(out, (n >> 12) & 63);
        append_group(out, (n >> 6) & 63);
        append_group(out, n & 63);
    }
    int group = 0, filled = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++filled == 6) {
                append_group(out, group);
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) append_group(out, group << (6 - filled));
    return out;
}

Graph from_graph6(std::string_view s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside printable range");
        return c - kOffset;
    };

    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    long n;
    if (s[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw std::invalid_argument("graph6: order exceeds 64");
        long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n < 1 || n > 64) throw std::invalid_argument("graph6: order must be in [1,64]");

    Graph g = Graph::empty(static_cast<int>(n));
    int group = 0, avail = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (avail == 0) {
                group = next();
                avail = 6;
            }
            if ((group >> (avail - 1)) & 1) g = g.with_edge(row, col);
            --avail;
        }
    }
    if (avail > 0 && (group & ((1 << avail) - 1)) != 0)
        throw std::invalid_argument("graph6: nonzero padding bits");
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

}  // namespace satkit
