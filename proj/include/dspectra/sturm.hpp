#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dspectra/polynomial.hpp"

namespace dspectra {

// One endpoint of an interval: finite rational or +/- infinity.
struct Bound {
    enum class Kind { finite, neg_inf, pos_inf };
    Kind kind = Kind::finite;
    Rational value;  // meaningful only when finite

    static Bound at(Rational v) { return Bound{Kind::finite, std::move(v)}; }
    static Bound minus_inf() { return Bound{Kind::neg_inf, Rational(0)}; }
    static Bound plus_inf() { return Bound{Kind::pos_inf, Rational(0)}; }
    std::string to_string() const;
};

// Open interval (lo, hi).
struct Interval {
    Bound lo, hi;
};

// Exact count of distinct real roots of p in the open interval, via a Sturm
// sequence over the rationals. Multiplicities are ignored.
long count_distinct_roots(const IntPolynomial& p, const Interval& iv);

// Real roots in the open interval counted with multiplicity, via squarefree
// decomposition plus Sturm counts of each squarefree factor.
long count_roots_with_multiplicity(const IntPolynomial& p, const Interval& iv);

// All real roots lie strictly inside (-B, B): Cauchy's bound.
Rational cauchy_root_bound(const IntPolynomial& p);

struct IntervalQuery {
    Interval iv;
    std::optional<long> expect_distinct;
    std::optional<long> expect_with_multiplicity;
};

struct IntervalCount {
    Interval iv;
    std::optional<long> expect_distinct;
    std::optional<long> expect_with_multiplicity;
    long distinct = 0;
    long with_multiplicity = 0;
    bool ok = true;  // stated expectations matched
};

struct RootBracketReport {
    IntPolynomial poly;
    std::vector<IntervalCount> intervals;
    bool pass = true;
};

// Exact real-root counts for each queried open interval. Throws
// contract_error for a zero polynomial or an empty interval.
RootBracketReport root_brackets(const IntPolynomial& p, const std::vector<IntervalQuery>& queries);

// All real roots of p, with multiplicity, sorted descending, computed by
// Sturm isolation plus dyadic bisection to absolute width below 2^-48.
std::vector<double> exact_real_roots(const IntPolynomial& p);

// Multiplicity of the rational value c as a root of p, by repeated exact
// division; zero when c is not a root.
int rational_root_multiplicity(const IntPolynomial& p, const Rational& c);

}  // namespace dspectra
