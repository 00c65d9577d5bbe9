#include "dspectra/graph.hpp"

#include <algorithm>
#include <bit>

namespace dspectra {

Graph::Graph(int n_vertices) {
    if (n_vertices < 1) throw validation_error("graph order must be at least 1");
    if (n_vertices > max_vertices)
        throw capacity_error("graph order " + std::to_string(n_vertices) + " exceeds the built-in limit of " +
                             std::to_string(max_vertices));
    n = n_vertices;
    adj.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw validation_error("edge endpoint out of range");
    if (u == v) throw validation_error("self-loops are not allowed");
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

int Graph::degree(int v) const {
    return std::popcount(adj[static_cast<std::size_t>(v)]);
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (auto row : adj) twice += static_cast<std::size_t>(std::popcount(row));
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n; ++u) {
        std::uint64_t above = adj[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        while (above) {
            int v = std::countr_zero(above);
            out.emplace_back(u, v);
            above &= above - 1;
        }
    }
    return out;
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

bool is_connected(const Graph& g) {
    std::uint64_t seen = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.adj[static_cast<std::size_t>(v)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    return seen == all;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    for (int v = 0; v < g.n; ++v) {
        c.adj[static_cast<std::size_t>(v)] =
            (~g.adj[static_cast<std::size_t>(v)] & all) & ~(std::uint64_t{1} << v);
    }
    return c;
}

DistanceMatrix apsp(const Graph& g) {
    DistanceMatrix dm(g.n);
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
    for (int s = 0; s < g.n; ++s) {
        std::uint64_t seen = std::uint64_t{1} << s;
        std::uint64_t frontier = seen;
        int level = 0;
        while (frontier) {
            ++level;
            std::uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.adj[static_cast<std::size_t>(v)];
            }
            next &= ~seen;
            std::uint64_t reached = next;
            while (reached) {
                int v = std::countr_zero(reached);
                reached &= reached - 1;
                dm.at(s, v) = level;
            }
            seen |= next;
            frontier = next;
        }
        if (seen != all)
            throw connectivity_error("distance matrix undefined: graph is disconnected");
    }
    return dm;
}

void validate(const DistanceMatrix& d) {
    const int n = d.n;
    for (int i = 0; i < n; ++i) {
        if (d.at(i, i) != 0) throw contract_error("distance matrix has a nonzero diagonal entry");
        for (int j = 0; j < n; ++j) {
            if (d.at(i, j) != d.at(j, i)) throw contract_error("distance matrix is not symmetric");
            if (i != j && d.at(i, j) < 1) throw contract_error("off-diagonal distance below 1");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (d.at(i, j) > d.at(i, k) + d.at(k, j))
                    throw contract_error("distance matrix violates the triangle inequality");
}

int diameter(const DistanceMatrix& d) {
    int m = 0;
    for (int v : d.d) m = std::max(m, v);
    return m;
}

namespace {

void check_subset(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw validation_error("vertex subset must be nonempty");
    std::uint64_t seen = 0;
    for (int v : s) {
        if (v < 0 || v >= g.n) throw validation_error("vertex subset index out of range");
        std::uint64_t bit = std::uint64_t{1} << v;
        if (seen & bit) throw validation_error("vertex subset contains a duplicate");
        seen |= bit;
    }
}

}  // namespace

Graph induced(const Graph& g, const std::vector<int>& s) {
    check_subset(g, s);
    Graph h(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

bool is_distance_preserving(const Graph& g, const std::vector<int>& s, std::string* why) {
    check_subset(g, s);
    Graph h = induced(g, s);
    if (!is_connected(h)) {
        if (why) *why = "induced subgraph is disconnected (internal distances infinite)";
        return false;
    }
    DistanceMatrix dg = apsp(g);
    DistanceMatrix dh = apsp(h);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (dh.at(static_cast<int>(i), static_cast<int>(j)) != dg.at(s[i], s[j])) {
                if (why)
                    *why = "distance between " + std::to_string(s[i]) + " and " + std::to_string(s[j]) +
                           " grows inside the subgraph";
                return false;
            }
        }
    }
    return true;
}

}  // namespace dspectra
