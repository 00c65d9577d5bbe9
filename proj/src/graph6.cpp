#include "dspectra/graph6.hpp"

namespace dspectra {

std::string graph6_encode(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        // three-byte order form, 18 bits big-endian
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int group = 0, filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t base = 0;
    if (line.substr(0, header.size()) == header) base = header.size();
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t'))
        line.remove_suffix(1);
    std::string_view body = line.substr(base);

    auto fail = [&](std::size_t offset_in_body, const std::string& what) -> void {
        throw parse_error("graph6: " + what + " at byte " + std::to_string(base + offset_in_body));
    };
    auto value_at = [&](std::size_t pos) -> int {
        if (pos >= body.size()) fail(body.size(), "input truncated");
        unsigned char c = static_cast<unsigned char>(body[pos]);
        if (c < 63 || c > 126) fail(pos, "character out of range 63..126");
        return c - 63;
    };

    if (body.empty()) fail(0, "empty input");
    std::size_t pos = 0;
    long n = 0;
    if (body[0] != '~') {
        n = value_at(0);
        pos = 1;
    } else {
        if (body.size() >= 2 && body[1] == '~') fail(1, "8-byte order form unsupported");
        n = (static_cast<long>(value_at(1)) << 12) | (value_at(2) << 6) | value_at(3);
        pos = 4;
    }
    if (n < 1) fail(0, "order must be at least 1");
    if (n > max_vertices)
        throw capacity_error("graph6: order " + std::to_string(n) + " exceeds the built-in limit of " +
                             std::to_string(max_vertices));

    const std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t groups_needed = (bits_needed + 5) / 6;
    if (body.size() - pos != groups_needed)
        fail(body.size(), "expected " + std::to_string(groups_needed) + " adjacency bytes, got " +
                              std::to_string(body.size() - pos));

    Graph g(static_cast<int>(n));
    std::size_t bit = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = value_at(pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    // trailing padding bits must be zero
    for (std::size_t b = bits_needed; b < groups_needed * 6; ++b) {
        int group = value_at(pos + b / 6);
        if ((group >> (5 - b % 6)) & 1) fail(pos + b / 6, "nonzero padding bit");
    }
    return g;
}

}  // namespace dspectra
