#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dspectra {

// Error taxonomy shared across the library. Every throwing entry point uses
// one of these so callers (and the CLI) can map failures to exit codes.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct validation_error : error {
    using error::error;
};
struct capacity_error : error {
    using error::error;
};
struct connectivity_error : error {
    using error::error;
};
struct parse_error : error {
    using error::error;
};
struct contract_error : error {
    using error::error;
};
struct unsupported_error : error {
    using error::error;
};

inline constexpr int max_vertices = 64;

// Simple undirected graph on vertex labels 0..n-1. Adjacency is one 64-bit
// row per vertex, which keeps degree counting, neighborhood intersection and
// the enumeration kernels down to a few popcounts.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;  // adj[v] has bit u set iff u ~ v

    Graph() = default;
    explicit Graph(int n_vertices);

    bool has_edge(int u, int v) const {
        return (adj[static_cast<std::size_t>(u)] >> v) & 1u;
    }
    void add_edge(int u, int v);

    std::uint64_t neighbors(int v) const { return adj[static_cast<std::size_t>(v)]; }
    int degree(int v) const;
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // (u,v) with u < v, lexicographic

    bool operator==(const Graph&) const = default;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

bool is_connected(const Graph& g);
Graph complement(const Graph& g);

// Pairwise shortest-path distances, row-major. Only ever produced for
// connected graphs, so every entry is finite.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d;

    DistanceMatrix() = default;
    explicit DistanceMatrix(int order) : n(order), d(static_cast<std::size_t>(order) * order, 0) {}

    int at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    int& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }

    bool operator==(const DistanceMatrix&) const = default;
};

// BFS from every vertex. Throws connectivity_error on disconnected input
// (the distance matrix would need infinite entries).
DistanceMatrix apsp(const Graph& g);

// Enforces the defining properties: symmetry, zero diagonal, off-diagonal
// entries >= 1, triangle inequality. Throws contract_error on violation.
void validate(const DistanceMatrix& d);

int diameter(const DistanceMatrix& d);

// Induced subgraph on S with order-preserving relabeling (S[i] -> i).
// S must be nonempty and in range; duplicates rejected.
Graph induced(const Graph& g, const std::vector<int>& s);

// True iff the induced subgraph on S keeps every pairwise distance of the
// parent, i.e. D(G[S]) is a principal submatrix of D(G). When false and
// `why` is non-null, a short reason is stored (disconnected subgraph or the
// first pair whose distance grew).
bool is_distance_preserving(const Graph& g, const std::vector<int>& s, std::string* why = nullptr);

}  // namespace dspectra
