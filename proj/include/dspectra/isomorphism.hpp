#pragma once

#include "dspectra/graph.hpp"

namespace dspectra {

// Exact isomorphism verdict. Cheap invariants first (order, size, sorted
// degree sequence, sorted BFS-distance row multisets), then color refinement
// to narrow candidate classes, then backtracking over refinement-compatible
// assignments. No canonical form is computed; this is a pairwise test.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace dspectra
