#include "dspectra/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace dspectra {

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

// BFS levels from v with unreachable vertices mapped to n; sorted per row so
// the multiset of rows is a relabeling invariant that also works for
// disconnected graphs.
std::vector<std::vector<int>> distance_row_multisets(const Graph& g) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(g.n));
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> row(static_cast<std::size_t>(g.n), g.n);
        row[static_cast<std::size_t>(s)] = 0;
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int level = 0;
        while (frontier) {
            ++level;
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(v);
            }
            next &= ~seen;
            for (std::uint64_t m = next; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                row[static_cast<std::size_t>(v)] = level;
            }
            seen |= next;
            frontier = next;
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

// One refinement pass over both graphs with a shared signature -> color map,
// so the resulting color ids are comparable across the pair.
bool refine_colors(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
    for (;;) {
        using Sig = std::pair<int, std::vector<int>>;
        auto signature = [](const Graph& g, const std::vector<int>& colors, int v) {
            std::vector<int> nb;
            for (std::uint64_t m = g.neighbors(v); m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                nb.push_back(colors[static_cast<std::size_t>(u)]);
            }
            std::sort(nb.begin(), nb.end());
            return Sig{colors[static_cast<std::size_t>(v)], std::move(nb)};
        };
        std::map<Sig, int> fresh;
        auto recolor = [&](const Graph& g, const std::vector<int>& colors) {
            std::vector<int> out(static_cast<std::size_t>(g.n));
            for (int v = 0; v < g.n; ++v) {
                auto [it, inserted] = fresh.try_emplace(signature(g, colors, v), static_cast<int>(fresh.size()));
                out[static_cast<std::size_t>(v)] = it->second;
            }
            return out;
        };
        std::vector<int> na = recolor(a, ca);
        std::vector<int> nb = recolor(b, cb);

        std::vector<int> ha = na, hb = nb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;  // color histograms diverge: not isomorphic

        bool stable = true;
        std::map<int, int> seen;
        for (std::size_t v = 0; v < na.size(); ++v) {
            auto [it, inserted] = seen.try_emplace(ca[v], na[v]);
            if (it->second != na[v]) stable = false;
        }
        ca = std::move(na);
        cb = std::move(nb);
        if (stable) return true;
    }
}

struct Matcher {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> order;   // a-vertices, small color classes first
    std::vector<int> map;     // a vertex -> b vertex
    std::uint64_t used = 0;

    bool try_match(std::size_t idx) {
        if (idx == order.size()) return true;
        int va = order[idx];
        for (int vb = 0; vb < b.n; ++vb) {
            std::uint64_t bit = std::uint64_t{1} << vb;
            if (used & bit) continue;
            if (cb[static_cast<std::size_t>(vb)] != ca[static_cast<std::size_t>(va)]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < idx; ++j) {
                int ua = order[j];
                if (a.has_edge(ua, va) != b.has_edge(map[static_cast<std::size_t>(ua)], vb)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(va)] = vb;
            used |= bit;
            if (try_match(idx + 1)) return true;
            used &= ~bit;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n) return false;
    if (a.edge_count() != b.edge_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    if (distance_row_multisets(a) != distance_row_multisets(b)) return false;

    std::vector<int> ca(static_cast<std::size_t>(a.n), 0), cb(static_cast<std::size_t>(b.n), 0);
    if (!refine_colors(a, b, ca, cb)) return false;

    Matcher m{a, b, ca, cb, {}, {}};
    m.order.resize(static_cast<std::size_t>(a.n));
    std::iota(m.order.begin(), m.order.end(), 0);
    std::vector<int> class_size(ca.size() + cb.size(), 0);
    for (int c : ca) ++class_size[static_cast<std::size_t>(c)];
    std::stable_sort(m.order.begin(), m.order.end(), [&](int x, int y) {
        return class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(x)])] <
               class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(y)])];
    });
    m.map.assign(static_cast<std::size_t>(a.n), -1);
    return m.try_match(0);
}

}  // namespace dspectra
