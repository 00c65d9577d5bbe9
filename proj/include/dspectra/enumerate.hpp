#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dspectra/family.hpp"
#include "dspectra/graph.hpp"
#include "dspectra/polynomial.hpp"

namespace dspectra {

// Exhaustive enumeration walks all 2^C(n,2) labeled graphs, so it is capped
// at seven vertices; larger graphs enter through explicit graph6 lists.
inline constexpr int max_enumeration_order = 7;

enum class Threading { serial, openmp };

// Lexicographic index of the pair (u,v), u < v, within the C(n,2) edge slots:
// (0,1), (0,2), ..., (0,n-1), (1,2), ...
int edge_bit(int n, int u, int v);

Graph graph_from_edge_mask(int n, std::uint32_t mask);
std::uint32_t edge_mask_of(const Graph& g);  // inverse; capacity_error above the cap

// Visits every connected labeled graph on n vertices exactly once, in
// ascending edge-mask order. capacity_error beyond the cap directs callers
// to graph6 ingestion.
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

// Same walk, but hands over the exact coefficients of the distance
// characteristic polynomial instead of the graph: coeffs[0..n], constant
// term first, leading coefficient 1. All values are int64-certified by the
// same bound the scan kernel uses. This is the fast path for whole-order
// property sweeps.
void for_each_connected(int n,
                        const std::function<void(std::uint32_t mask, const std::int64_t* coeffs)>& visit);

// Label-invariant 64-bit digest of an exact characteristic polynomial. Used
// only to bucket scan entries; every claim derived from a bucket is confirmed
// against the exact coefficients afterwards.
std::uint64_t poly_hash(const IntPolynomial& p);

struct ScanEntry {
    std::uint64_t hash = 0;
    std::uint32_t mask = 0;
    friend auto operator<=>(const ScanEntry&, const ScanEntry&) = default;
};

// Index of every connected labeled graph on n vertices: one entry per graph
// carrying the digest of its exact distance characteristic polynomial,
// sorted by (digest, mask). The serial and OpenMP builders produce
// byte-identical indexes; the serial one is the reference the parallel one
// is tested against.
struct ScanIndex {
    int n = 0;
    std::uint64_t total_masks = 0;
    std::uint64_t connected_count = 0;
    std::vector<ScanEntry> entries;
    friend bool operator==(const ScanIndex&, const ScanIndex&) = default;
};

ScanIndex build_scan_index(int n, Threading mode = Threading::openmp);

// One isomorphism class inside a scan: its smallest labeled representative
// and how many labeled copies the scan saw.
struct IsoClass {
    std::uint32_t min_mask = 0;
    std::uint64_t labeled_count = 0;
    friend bool operator==(const IsoClass&, const IsoClass&) = default;
};

// Two or more pairwise non-isomorphic graphs sharing one exact polynomial.
struct CospectralClass {
    IntPolynomial poly;
    std::vector<IsoClass> members;  // ascending min_mask
};

struct CensusReport {
    int n = 0;
    std::uint64_t connected_labeled = 0;
    std::uint64_t connected_classes = 0;       // isomorphism classes
    std::uint64_t distinct_polynomials = 0;
    std::vector<CospectralClass> nontrivial;   // ascending first member
};

CensusReport cospectral_census(const ScanIndex& index);
CensusReport cospectral_census(int n, Threading mode = Threading::openmp);

// Verdict of a determination check. Exhaustive sources can certify the
// positive answer at their scale; a supplied graph list can only refute.
enum class DsVerdict { ds_at_this_scale, refuted, inconclusive };

// Result of testing one connected graph against a search space: the graph
// is determined by its distance spectrum at that scale iff no non-isomorphic
// candidate shares its exact characteristic polynomial.
struct DsReport {
    std::string target;
    std::string search_space;
    int n = 0;
    std::uint64_t candidates = 0;       // connected graphs scanned
    std::uint64_t labeled_matches = 0;  // candidates with the same polynomial
    std::uint64_t target_orbit = 0;     // of those, isomorphic to the target
    IntPolynomial poly;
    std::vector<Graph> mates;           // one representative per other class
    DsVerdict verdict = DsVerdict::inconclusive;
    bool determined() const { return verdict == DsVerdict::ds_at_this_scale; }
};

DsReport ds_check(const Graph& g, std::string label, const ScanIndex& index);
DsReport ds_check(const FamilySpec& spec, const ScanIndex& index);
DsReport ds_check(const FamilySpec& spec, Threading mode = Threading::openmp);

// Census over an explicit list of graphs (any representable order, but all
// of the same order): groups by exact polynomial, splits each group into
// isomorphism classes, and reports the groups with at least two classes.
struct ListCensusClass {
    IntPolynomial poly;
    std::vector<std::vector<int>> members;  // input indices, grouped by isomorphism
};

struct ListCensusReport {
    int n = 0;
    std::size_t graphs = 0;
    std::size_t distinct_polynomials = 0;
    std::vector<ListCensusClass> nontrivial;
};

ListCensusReport census_of_graphs(const std::vector<Graph>& graphs);

}  // namespace dspectra
