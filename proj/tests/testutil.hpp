#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dspectra/graph.hpp"

namespace testutil {

// Deterministic RNG so failures reproduce; seed per test site.
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline dspectra::Graph random_graph(int n, double p, std::mt19937_64& gen) {
    dspectra::Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(gen)) g.add_edge(u, v);
    return g;
}

inline dspectra::Graph random_connected_graph(int n, double p, std::mt19937_64& gen) {
    for (;;) {
        dspectra::Graph g = random_graph(n, p, gen);
        if (dspectra::is_connected(g)) return g;
    }
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& gen) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    return perm;
}

inline dspectra::Graph relabel(const dspectra::Graph& g, const std::vector<int>& perm) {
    dspectra::Graph h(g.n);
    for (auto [u, v] : g.edges())
        h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return h;
}

}  // namespace testutil
