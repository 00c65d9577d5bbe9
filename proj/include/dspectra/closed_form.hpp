#pragma once

#include <string>
#include <vector>

#include "dspectra/family.hpp"
#include "dspectra/polynomial.hpp"
#include "dspectra/sturm.hpp"

namespace dspectra {

// The reduced factor carrying the non-trivial eigenvalues of each family:
// a cubic for the pendant-clique and glued-clique families, a quartic for the
// bridged-clique family, a quadratic for the friendship family. Throws
// unsupported_error for other kinds, validation_error for bad parameters.
IntPolynomial reduced_factor(const FamilySpec& spec);

// Fully expanded distance characteristic polynomial predicted for the family:
// supported for kh, kst_bridge, kst_glued, friendship, and clique_cone.
// Monic of degree n; equals dist_charpoly of the constructed graph.
IntPolynomial closed_form(const FamilySpec& spec);

struct SignCheckpoint {
    Rational point;     // evaluation point, e.g. -1/2
    Rational value;     // exact value of the reduced factor there
    int expected_sign;  // the strict sign the argument requires: -1 or +1
    int computed_sign;  // sign of value: -1, 0, +1
    bool ok;            // computed == expected
};

struct SignReport {
    std::string family;
    IntPolynomial factor;
    std::vector<SignCheckpoint> checkpoints;
    bool pass;  // all checkpoints ok
};

// Evaluates the family's reduced factor at the checkpoints used to localize
// its roots (kh and kst_bridge: 0, -1/2, -1, -2; kst_glued: 0, -2/3, -1) and
// compares each exact sign with the required one.
SignReport sign_conditions(const FamilySpec& spec);

// Sturm-counts the reduced factor against the open intervals its roots are
// claimed to occupy, expecting exactly one simple root in each:
//   kh          (0, +inf), (-1, -1/2), (-inf, -2)
//   kst_bridge  (0, +inf), (-1, -1/2), (-2, -1), (-inf, -2)
//   kst_glued   (0, +inf), (-1, -2/3), (-inf, -1)
//   friendship  (0, +inf), (-1, 0)
// Together the intervals account for every root of the factor.
RootBracketReport factor_root_brackets(const FamilySpec& spec);

}  // namespace dspectra
