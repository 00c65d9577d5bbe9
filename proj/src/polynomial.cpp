#include "dspectra/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dspectra {

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    normalize();
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[static_cast<std::size_t>(k)];
}

const BigInt& IntPolynomial::leading() const {
    if (c_.empty()) throw contract_error("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial operator*(const BigInt& s, const IntPolynomial& a) {
    std::vector<BigInt> r(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = s * a.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return IntPolynomial();
    std::vector<BigInt> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = BigInt(static_cast<long>(i)) * c_[i];
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::content() const {
    BigInt g(0);
    for (const BigInt& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive() const {
    if (is_zero()) return IntPolynomial();
    BigInt g = content();
    if (c_.back() < 0) g = -g;
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& a = c_[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (!unit) out << mag.get_str() << "*";
            out << "x";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

IntPolynomial monomial(int k, const BigInt& a) {
    if (k < 0) throw contract_error("monomial with negative degree");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1, BigInt(0));
    c.back() = a;
    return IntPolynomial(std::move(c));
}

IntPolynomial linear_power(const BigInt& a, int k) {
    if (k < 0) throw contract_error("linear_power with negative exponent");
    IntPolynomial result({1});
    IntPolynomial base(std::vector<BigInt>{a, BigInt(1)});
    for (int i = 0; i < k; ++i) result = result * base;
    return result;
}

namespace {

// Division over the rationals; returns {quotient, remainder}.
std::pair<std::vector<Rational>, std::vector<Rational>> divmod_rational(const IntPolynomial& num,
                                                                        const IntPolynomial& den) {
    if (den.is_zero()) throw contract_error("polynomial division by zero");
    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {{}, std::move(rem)};
    std::vector<Rational> quo(static_cast<std::size_t>(dn - dd) + 1, Rational(0));
    Rational lead(den.leading());
    for (int k = dn - dd; k >= 0; --k) {
        Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
        quo[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * Rational(den.coeff(j));
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {std::move(quo), std::move(rem)};
}

// Clears denominators by the positive lcm and strips content; sign preserved.
IntPolynomial clear_to_primitive(const std::vector<Rational>& v) {
    BigInt l(1);
    for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rational scaled = v[i] * Rational(l);
        c[i] = scaled.get_num();  // denominator is 1 after scaling by the lcm
    }
    IntPolynomial p(std::move(c));
    if (p.is_zero()) return p;
    BigInt g = p.content();
    std::vector<BigInt> r(p.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.coeffs()[i] / g;
    return IntPolynomial(std::move(r));
}

}  // namespace

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
    auto [quo, rem] = divmod_rational(num, den);
    for (const Rational& q : rem)
        if (q != 0) throw contract_error("polynomial division is not exact");
    std::vector<BigInt> c(quo.size());
    for (std::size_t i = 0; i < quo.size(); ++i) {
        if (quo[i].get_den() != 1) throw contract_error("polynomial division is not exact");
        c[i] = quo[i].get_num();
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial remainder_primitive(const IntPolynomial& num, const IntPolynomial& den) {
    auto [quo, rem] = divmod_rational(num, den);
    (void)quo;
    return clear_to_primitive(rem);
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial u = a.primitive(), v = b.primitive();
    if (u.is_zero()) return v;
    if (v.is_zero()) return u;
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = remainder_primitive(u, v);
        u = std::move(v);
        v = std::move(r);
    }
    return u;
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) return IntPolynomial();
    if (p.degree() == 0) return IntPolynomial({1});
    IntPolynomial g = poly_gcd(p, p.derivative());
    return divide_exact(p.primitive(), g).primitive();
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p) {
    // Musser's scheme: a_{i+1} = gcd(a_i, a_i'), b_i = a_{i-1}/a_i is the
    // product of the distinct factors of multiplicity >= i, and the factors of
    // exact multiplicity i are b_i / b_{i+1}. gcd and exact division are both
    // insensitive to the positive constant scaling introduced by primitive().
    std::vector<std::pair<IntPolynomial, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    std::vector<IntPolynomial> a{p.primitive()};
    while (a.back().degree() > 0) a.push_back(poly_gcd(a.back(), a.back().derivative()));
    std::vector<IntPolynomial> b;
    for (std::size_t i = 1; i < a.size(); ++i)
        b.push_back(divide_exact(a[i - 1], a[i]).primitive());
    for (std::size_t i = 0; i < b.size(); ++i) {
        IntPolynomial next = (i + 1 < b.size()) ? b[i + 1] : IntPolynomial({1});
        IntPolynomial g = divide_exact(b[i], next).primitive();
        if (g.degree() > 0) out.emplace_back(std::move(g), static_cast<int>(i + 1));
    }
    return out;
}

}  // namespace dspectra
