#pragma once

#include <vector>

#include "dspectra/graph.hpp"

namespace dspectra {

inline constexpr double default_eigen_tol = 1e-12;
inline constexpr double default_cluster_tol = 1e-8;

// Floating-point eigenvalues, sorted descending, with the tolerance they were
// computed under.
struct Spectrum {
    std::vector<double> values;
    double tol = default_eigen_tol;
};

// All eigenvalues of a symmetric integer matrix by cyclic Jacobi rotations,
// iterated until the off-diagonal Frobenius mass drops below tol (or the
// floating-point floor, whichever comes first). Throws contract_error for
// non-symmetric input or tol <= 0.
Spectrum eigenvalues(const DistanceMatrix& d, double tol = default_eigen_tol);
Spectrum eigenvalues(const Graph& g, double tol = default_eigen_tol);

// Cauchy interlacing within tol: child value i must lie in
// [parent value (n-m+i) - tol, parent value i + tol] (1-based, descending).
// Throws contract_error when the child is longer than the parent.
bool interlacing_check(const Spectrum& parent, const Spectrum& child, double tol);

// Number of eigenvalues within cluster_tol of value.
int multiplicity(const Spectrum& s, double value, double cluster_tol = default_cluster_tol);

// Both sides of the complete-multipartite spectral characterization:
// structurally, G is complete k-partite iff its complement is a disjoint
// union of k cliques (the characterization needs 2 <= k <= n-1); spectrally, the
// smallest distance eigenvalue is exactly -2 with multiplicity n-k. Both
// verdicts are computed independently (the spectral one with exact
// arithmetic) along with whether they agree.
struct MultipartiteReport {
    bool complement_is_clique_union = false;
    int k = 0;                  // number of complement components (parts)
    std::vector<int> parts;     // part sizes, descending (when clique union)
    bool structural = false;    // complete k-partite with 2 <= k <= n-1
    bool spectral = false;      // lambda_min = -2 exactly (multiplicity >= 1)
    int minus_two_multiplicity = 0;
    double lambda_min = 0.0;    // floating diagnostic
    bool agree = false;         // biconditional (with matching k) holds
};
MultipartiteReport multipartite_characterization_check(const Graph& g);

}  // namespace dspectra
