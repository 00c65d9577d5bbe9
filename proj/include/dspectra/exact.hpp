#pragma once

#include <gmpxx.h>

#include <string>

#include "dspectra/graph.hpp"

namespace dspectra {

// Arbitrary-precision integer and reduced rational, backed by GMP.
using BigInt = mpz_class;
using Rational = mpq_class;

inline int sign_of(const BigInt& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

// Parses "p", "-p", or "p/q" into a reduced rational with positive denominator.
inline Rational rational_of(const std::string& s) {
    Rational q;
    try {
        q = Rational(s);
    } catch (const std::invalid_argument&) {
        throw parse_error("not a rational number: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace dspectra
