#include "dspectra/fixtures.hpp"

#include <algorithm>

namespace dspectra {

DistanceMatrix Fixture::distances() const {
    if (graph) return apsp(*graph);
    return *matrix;
}

int Fixture::order() const { return graph ? graph->n : matrix->n; }

namespace {

Fixture graph_fixture(std::string name, int n, const std::vector<std::pair<int, int>>& edges,
                      std::vector<double> spectrum = {},
                      std::vector<std::pair<int, double>> points = {}) {
    Fixture f;
    f.name = std::move(name);
    f.graph = graph_from_edges(n, edges);
    f.expected_spectrum = std::move(spectrum);
    f.expected_points = std::move(points);
    return f;
}

Fixture matrix_fixture(std::string name, const std::vector<std::vector<int>>& rows,
                       std::vector<std::pair<int, double>> points) {
    Fixture f;
    f.name = std::move(name);
    const int n = static_cast<int>(rows.size());
    DistanceMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    validate(m);
    f.matrix = std::move(m);
    f.expected_points = std::move(points);
    return f;
}

Fixture param_abc(int a, int b, int c, double lambda2) {
    std::string name = "param_abc(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ")";
    return matrix_fixture(std::move(name),
                          {{0, 1, 2, a, b}, {1, 0, 1, 2, c}, {2, 1, 0, 1, 2},
                           {a, 2, 1, 0, 1}, {b, c, 2, 1, 0}},
                          {{2, lambda2}});
}

Fixture param_ab(int a, int b, double lambda2) {
    std::string name = "param_ab(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return matrix_fixture(std::move(name),
                          {{0, 1, 2, a}, {1, 0, 1, 2}, {2, 1, 0, b}, {a, 2, b, 0}},
                          {{2, lambda2}});
}

std::vector<Fixture> build_catalog() {
    std::vector<Fixture> cat;

    cat.push_back(graph_fixture("P4", 4, {{0, 1}, {1, 2}, {2, 3}},
                                {5.1623, -0.5858, -1.1623, -3.4142}));
    cat.push_back(graph_fixture("P5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}},
                                {8.2882, -0.5578, -0.7639, -1.7304, -5.2361}));
    cat.push_back(graph_fixture("C4", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}},
                                {4.0000, 0.0000, -2.0000, -2.0000}));
    cat.push_back(graph_fixture("C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}},
                                {6.0000, -0.3820, -0.3820, -2.6180, -2.6180}));

    cat.push_back(graph_fixture("H1", 5,
                                {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}, {4, 3}},
                                {5.2926, -0.3820, -0.7217, -1.5709, -2.6180}));
    cat.push_back(graph_fixture("H2", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 1}, {4, 2}},
                                {6.2162, -0.4521, -1.0000, -1.1971, -3.5669}));
    cat.push_back(graph_fixture("H3", 5, {{0, 1}, {1, 2}, {2, 3}, {4, 1}, {4, 2}},
                                {6.6375, -0.5858, -0.8365, -1.8010, -3.4142}));
    cat.push_back(graph_fixture("H4", 5, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {1, 3}, {3, 4}},
                                {5.7596, -0.5580, -0.7667, -2.0000, -2.4348}));
    cat.push_back(graph_fixture("H5", 6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}, {0, 5}},
                                {9.3154, -0.5023, -1.0000, -1.0865, -2.3224, -4.4042}));
    cat.push_back(graph_fixture("H6", 6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {1, 5}},
                                {9.6702, -0.4727, -1.0566, -2.0000, -2.0000, -4.1409}));
    cat.push_back(graph_fixture("H7", 6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}},
                                {10.0000, -0.4348, -1.0000, -2.0000, -2.0000, -4.5616}));
    cat.push_back(graph_fixture("H8", 6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 5}},
                                {9.6088, -0.4931, -1.0000, -1.0924, -2.0000, -5.0233}));
    cat.push_back(graph_fixture("H9", 5,
                                {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 3}, {1, 4},
                                 {2, 3}, {2, 4}},
                                {4.4495, -0.4495, -1.0000, -1.0000, -2.0000}));
    cat.push_back(graph_fixture("H10", 5,
                                {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 3}, {3, 4}},
                                {5.3723, -0.3723, -1.0000, -2.0000, -2.0000}));
    cat.push_back(graph_fixture("H11", 6,
                                {{1, 2}, {3, 4}, {1, 3}, {2, 4}, {0, 1}, {0, 3}, {0, 4},
                                 {0, 2}, {1, 4}, {3, 2}, {5, 3}, {5, 4}},
                                {6.1425, -0.4913, -1.0000, -1.0000, -1.0000, -2.6512}));
    cat.push_back(graph_fixture("H12", 6,
                                {{0, 1}, {1, 2}, {0, 4}, {1, 4}, {1, 5}, {2, 4}, {4, 5},
                                 {1, 3}, {4, 3}, {0, 3}, {2, 5}},
                                {6.4641, -0.4641, -1.0000, -1.0000, -1.0000, -3.0000}));
    cat.push_back(graph_fixture("H13", 6,
                                {{0, 1}, {1, 2}, {0, 3}, {2, 5}, {1, 4}, {1, 5}, {1, 3}},
                                {7.8526, -0.6303, -1.0000, -1.0000, -2.2223, -3.0000}));

    cat.push_back(graph_fixture("B1", 5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}},
                                {7.4593, -0.5120, -1.0846, -2.0000, -3.8627}));
    cat.push_back(graph_fixture("B2", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}},
                                {3.5616, -0.5616, -1.0000, -2.0000}));
    cat.push_back(graph_fixture("B3", 5,
                                {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {3, 4}, {1, 3}, {1, 4}, {2, 4}},
                                {4.9018, -0.5122, -1.0000, -1.0000, -2.3896}));

    // T graphs: vertices x=0, y=1, z=2, w=3, v=4 (T5 adds two more leaves).
    cat.push_back(graph_fixture("T1", 5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}}));
    cat.push_back(graph_fixture("T2", 5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 3}}));
    cat.push_back(graph_fixture("T3", 5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 3}, {2, 3}}));
    cat.push_back(graph_fixture("T4", 5, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}},
                                {}, {{3, -0.7667}}));
    cat.push_back(graph_fixture(
        "T5", 7, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {1, 5}, {1, 6}, {3, 4}},
        {}, {{7, -3.0984}}));

    cat.push_back(matrix_fixture("D1",
                                 {{0, 1, 2, 2, 2},
                                  {1, 0, 1, 1, 2},
                                  {2, 1, 0, 2, 2},
                                  {2, 1, 2, 0, 1},
                                  {2, 2, 2, 1, 0}},
                                 {{2, -0.2248}}));
    cat.push_back(matrix_fixture("D2",
                                 {{0, 1, 2, 1, 2},
                                  {1, 0, 1, 1, 2},
                                  {2, 1, 0, 2, 2},
                                  {1, 1, 2, 0, 1},
                                  {2, 2, 2, 1, 0}},
                                 {{2, -0.3820}}));
    cat.push_back(matrix_fixture("D3",
                                 {{0, 1, 2, 1, 2},
                                  {1, 0, 1, 1, 2},
                                  {2, 1, 0, 1, 2},
                                  {1, 1, 1, 0, 1},
                                  {2, 2, 2, 1, 0}},
                                 {{3, -0.7667}}));

    cat.push_back(param_abc(2, 2, 2, -0.2909));
    cat.push_back(param_abc(2, 2, 3, -0.3260));
    cat.push_back(param_abc(2, 3, 2, -0.1646));
    cat.push_back(param_abc(2, 3, 3, -0.3713));
    cat.push_back(param_abc(3, 2, 2, -0.3260));
    cat.push_back(param_abc(3, 2, 3, 0.0000));
    cat.push_back(param_abc(3, 3, 2, -0.3713));
    cat.push_back(param_abc(3, 3, 3, -0.4348));

    cat.push_back(param_ab(1, 1, 0.0000));
    cat.push_back(param_ab(1, 2, -0.3820));
    cat.push_back(param_ab(2, 1, -0.3820));
    cat.push_back(param_ab(2, 2, -0.6519));

    return cat;
}

}  // namespace

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> catalog = build_catalog();
    return catalog;
}

const Fixture* find_fixture(const std::string& name) {
    for (const Fixture& f : fixture_catalog())
        if (f.name == name) return &f;
    return nullptr;
}

std::vector<const Fixture*> table_fixtures() {
    std::vector<const Fixture*> out;
    for (const Fixture& f : fixture_catalog())
        if (!f.expected_spectrum.empty()) out.push_back(&f);
    return out;
}

}  // namespace dspectra
