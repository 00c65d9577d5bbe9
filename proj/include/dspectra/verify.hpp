#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dspectra/enumerate.hpp"
#include "dspectra/family.hpp"
#include "dspectra/graph.hpp"

namespace dspectra {

// Decoded connected graphs from a newline-delimited graph6 stream. In strict
// mode a malformed line throws parse_error naming the line; in lenient mode
// it is skipped and counted. Disconnected entries are always skipped with a
// warning, since distance spectra need connectivity.
struct IngestResult {
    std::vector<Graph> graphs;
    std::size_t lines_read = 0;  // non-blank lines
    std::size_t parse_warnings = 0;
    std::size_t disconnected_warnings = 0;
    std::vector<std::string> notes;  // one human-readable line per warning
};

IngestResult ingest_graph6(std::istream& in, bool strict = true);

// Determination check against a supplied candidate list instead of the
// built-in exhaustive scan. A list can refute but never certify, so the
// verdict is refuted or inconclusive.
DsReport ds_check_stream(const FamilySpec& target, const std::vector<Graph>& candidates,
                         const std::string& source);

// The two forbidden-subgraph contexts: the lists barring small graphs from
// appearing inside clique-derived family members (pendant, bridged, glued)
// and inside friendship graphs.
enum class ForbiddenContext { clique_families, friendship_family };

const std::vector<std::string>& forbidden_list(ForbiddenContext context);

struct ForbiddenHit {
    std::string fixture;
    std::vector<int> witness;  // host vertices, pattern order
};

// Requalification of one forbidden fixture: the spectral bound that makes it
// forbidden, re-established from its exact polynomial.
struct BoundCheck {
    std::string fixture;
    std::string bound;  // "lambda_2 >= -1/2" | "lambda_3 > -1" | "lambda_{m-1} < -2"
    bool holds = false;
};

struct ForbiddenReport {
    ForbiddenContext context;
    std::vector<ForbiddenHit> hits;  // induced occurrences inside the target
    bool clean = false;              // no forbidden subgraph found
    std::vector<BoundCheck> bounds;  // one per fixture on the context's list
    bool bounds_ok = false;          // every fixture qualifies via some bound
};

ForbiddenReport forbidden_check(const Graph& g, ForbiddenContext context);

// Comparison of every bundled single-eigenvalue reference point (the proof
// matrices D1-D3, the parametric matrices, T4, T5) against a fresh
// computation. Mismatches are reported, not fatal.
struct TableEntry {
    std::string fixture;
    int index = 0;  // 1-based position in the descending spectrum
    double printed = 0;
    double computed = 0;
    bool ok = false;
    std::string note;
};

struct TableReport {
    double tol = 1e-3;
    std::vector<TableEntry> entries;
    bool all_ok = false;
};

TableReport table_check(double tol = 1e-3);

// Edge-count dichotomy over cospectral pairs: when the first member has
// diameter 2, the second has equal edge count if its diameter is 2 and
// strictly more edges if its diameter is at least 3. Pairs whose first
// member has diameter != 2 are skipped with a note.
struct EdgeDichotomyEntry {
    std::size_t pair_index = 0;
    bool applicable = false;
    int diam_first = 0;
    int diam_second = 0;
    std::size_t edges_first = 0;
    std::size_t edges_second = 0;
    bool ok = false;
    std::string note;
};

struct EdgeDichotomyReport {
    std::vector<EdgeDichotomyEntry> entries;
    std::size_t checked = 0;
    std::size_t skipped = 0;
    bool all_ok = false;
};

EdgeDichotomyReport edge_count_dichotomy_check(const std::vector<std::pair<Graph, Graph>>& pairs);

}  // namespace dspectra
