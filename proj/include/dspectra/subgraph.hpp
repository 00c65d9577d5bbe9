#pragma once

#include <optional>
#include <vector>

#include "dspectra/graph.hpp"

namespace dspectra {

// Searches for an induced copy of `pattern` inside `host`. Returns the
// injective vertex map phi (pattern vertex i -> host vertex phi[i]) that is
// lexicographically first as the tuple (phi[0], ..., phi[m-1]), or nullopt.
// Backtracking assigns pattern vertices in index order with degree pruning.
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern);

}  // namespace dspectra
