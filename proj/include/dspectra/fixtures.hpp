#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dspectra/graph.hpp"

namespace dspectra {

// One catalogued graph or matrix together with the reference eigenvalues
// printed for it in the source tables.
struct Fixture {
    std::string name;
    std::optional<Graph> graph;  // exactly one of graph / matrix is set
    std::optional<DistanceMatrix> matrix;

    // Full reference spectrum, descending, when a complete row is printed.
    std::vector<double> expected_spectrum;
    // Isolated reference eigenvalues: (1-based index into the descending
    // spectrum, printed value).
    std::vector<std::pair<int, double>> expected_points;

    DistanceMatrix distances() const;  // apsp of the graph, or the matrix
    int order() const;
};

// The full catalog, in a fixed order: the 20 graphs with complete reference
// rows (P4, P5, C4, C5, H1..H13, B1..B3), the five T graphs, the three proof
// matrices D1..D3, the eight param_abc(a,b,c) matrices with a,b,c in {2,3},
// and the four param_ab(a,b) matrices with a,b in {1,2}.
const std::vector<Fixture>& fixture_catalog();

// Lookup by name; nullptr when absent.
const Fixture* find_fixture(const std::string& name);

// The 20 graph fixtures carrying a full reference spectrum, catalog order.
std::vector<const Fixture*> table_fixtures();

}  // namespace dspectra
