#pragma once

#include "dspectra/graph.hpp"
#include "dspectra/polynomial.hpp"

namespace dspectra {

// Characteristic polynomial det(xI - M) of a symmetric integer matrix, exact,
// monic of degree n. Faddeev-LeVerrier over arbitrary-precision integers,
// with an overflow-checked int64 fast path for small matrices.
IntPolynomial charpoly(const DistanceMatrix& m);

// det(xI - D(g)) for the distance matrix of a connected graph.
IntPolynomial dist_charpoly(const DistanceMatrix& d);
IntPolynomial dist_charpoly(const Graph& g);

// Independent slow path used to cross-check charpoly: evaluates det(xI - M)
// at n+1 integer points with fraction-free Bareiss elimination and
// interpolates exactly over the rationals.
IntPolynomial charpoly_reference(const DistanceMatrix& m);
IntPolynomial dist_charpoly_reference(const Graph& g);

// Determinant of a dense integer matrix (row-major, n x n), fraction-free.
BigInt det_bareiss(std::vector<BigInt> a, int n);

}  // namespace dspectra
