#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dspectra/exact.hpp"

namespace dspectra {

// Dense integer polynomial. Coefficients are stored constant term first;
// the representation is normalized: no trailing zero coefficients, and the
// zero polynomial is the empty coefficient vector (degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPolynomial(std::initializer_list<long> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    // Coefficient of x^k; zero outside the stored range.
    BigInt coeff(int k) const;
    const BigInt& leading() const;  // pre: nonzero polynomial
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& a);
    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial derivative() const;
    // gcd of |coefficients|; zero for the zero polynomial.
    BigInt content() const;
    // Polynomial divided by its content, scaled so the leading coefficient is
    // positive. Zero stays zero.
    IntPolynomial primitive() const;

    BigInt eval(const BigInt& x) const;
    Rational eval(const Rational& x) const;
    // Sign of the value at x: -1, 0, or +1.
    int sign_at(const Rational& x) const { return sign_of(eval(x)); }

    // Human-readable form such as "x^4 - 6*x^2 - 8*x - 3".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> c_;
};

// x^k scaled by a.
IntPolynomial monomial(int k, const BigInt& a = 1);
// (x + a)^k, k >= 0.
IntPolynomial linear_power(const BigInt& a, int k);

// Quotient of num by den; throws contract_error if den is zero or does not
// divide num exactly over the integers.
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// Quotient and remainder over the rationals, with the remainder cleared back
// to a primitive integer polynomial scaled by a positive rational (so its
// real roots and signs match the true remainder's). Returns that remainder.
IntPolynomial remainder_primitive(const IntPolynomial& num, const IntPolynomial& den);

// Polynomial gcd over the integers: primitive with positive leading
// coefficient; gcd(0, 0) = 0.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

// Squarefree part: p / gcd(p, p'), primitive, positive leading coefficient.
IntPolynomial squarefree_part(const IntPolynomial& p);

// Yun squarefree decomposition: returns pairs (g, m) with m strictly
// increasing, each g primitive squarefree of degree >= 1, and
// primitive(p) = lc * prod g^m.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);

// Exact evaluation used by the sign-condition checks.
inline Rational poly_eval_rational(const IntPolynomial& p, const Rational& x) {
    return p.eval(x);
}

}  // namespace dspectra
