#include "dspectra/charpoly.hpp"

#include <cstdint>

namespace dspectra {

namespace {

void require_symmetric(const DistanceMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw contract_error("matrix is not symmetric");
}

long long max_row_sum(const DistanceMatrix& m) {
    long long best = 1;
    for (int i = 0; i < m.n; ++i) {
        long long s = 0;
        for (int j = 0; j < m.n; ++j) s += std::abs(static_cast<long long>(m.at(i, j)));
        best = std::max(best, s);
    }
    return best;
}

// Every Faddeev-LeVerrier intermediate (entries of the adjugate-chain
// matrices, their products with A, and traces) is bounded in magnitude by
// n * 2^n * R^n where R is the maximum absolute row sum: the chain matrices
// are polynomials in the symmetric A, so their entries are bounded by the
// spectral radius of those polynomials, and |coeff_j| <= C(n,j) R^j.
bool fits_int64(const DistanceMatrix& m, long long R) {
    BigInt bound = BigInt(m.n) * (BigInt(1) << static_cast<unsigned>(m.n));
    BigInt rbig(static_cast<long>(R));
    for (int i = 0; i < m.n; ++i) bound *= rbig;
    return bound < (BigInt(1) << 62);
}

std::vector<BigInt> faddeev_leverrier_int64(const DistanceMatrix& d) {
    const int n = d.n;
    std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = d.at(i, j);
    std::vector<std::int64_t> m(a.size(), 0), am(a.size());
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * (n + 1)] = 1;
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::int64_t s = 0;
                for (int l = 0; l < n; ++l)
                    s += a[static_cast<std::size_t>(i) * n + l] * m[static_cast<std::size_t>(l) * n + j];
                am[static_cast<std::size_t>(i) * n + j] = s;
            }
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i) tr += am[static_cast<std::size_t>(i) * (n + 1)];
        std::int64_t ck = -tr / k;  // division is exact
        c[static_cast<std::size_t>(n - k)] = ck;
        m = am;
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * (n + 1)] += ck;
    }
    return c;
}

std::vector<BigInt> faddeev_leverrier_big(const DistanceMatrix& d) {
    const int n = d.n;
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = d.at(i, j);
    std::vector<BigInt> m(a.size(), BigInt(0)), am(a.size());
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * (n + 1)] = 1;
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;
    BigInt s, tr;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                s = 0;
                for (int l = 0; l < n; ++l)
                    s += a[static_cast<std::size_t>(i) * n + l] * m[static_cast<std::size_t>(l) * n + j];
                am[static_cast<std::size_t>(i) * n + j] = s;
            }
        tr = 0;
        for (int i = 0; i < n; ++i) tr += am[static_cast<std::size_t>(i) * (n + 1)];
        BigInt ck = -tr / k;  // division is exact
        c[static_cast<std::size_t>(n - k)] = ck;
        std::swap(m, am);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * (n + 1)] += ck;
    }
    return c;
}

}  // namespace

IntPolynomial charpoly(const DistanceMatrix& m) {
    require_symmetric(m);
    if (m.n == 0) return IntPolynomial({1});
    long long R = max_row_sum(m);
    if (fits_int64(m, R)) return IntPolynomial(faddeev_leverrier_int64(m));
    return IntPolynomial(faddeev_leverrier_big(m));
}

IntPolynomial dist_charpoly(const DistanceMatrix& d) {
    validate(d);
    return charpoly(d);
}

IntPolynomial dist_charpoly(const Graph& g) { return charpoly(apsp(g)); }

BigInt det_bareiss(std::vector<BigInt> a, int n) {
    if (static_cast<int>(a.size()) != n * n) throw contract_error("matrix size mismatch");
    if (n == 0) return BigInt(1);
    BigInt prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[static_cast<std::size_t>(k) * (n + 1)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<std::size_t>(i) * n + k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return BigInt(0);
            for (int j = 0; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(k) * n + j],
                          a[static_cast<std::size_t>(piv) * n + j]);
            sign = -sign;
        }
        const BigInt& pivot = a[static_cast<std::size_t>(k) * (n + 1)];
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                BigInt& x = a[static_cast<std::size_t>(i) * n + j];
                x = x * pivot - a[static_cast<std::size_t>(i) * n + k] *
                                    a[static_cast<std::size_t>(k) * n + j];
                x /= prev;  // exact by the Bareiss identity
            }
        prev = pivot;
    }
    BigInt det = a[static_cast<std::size_t>(n) * n - 1];
    return sign < 0 ? BigInt(-det) : det;
}

IntPolynomial charpoly_reference(const DistanceMatrix& m) {
    require_symmetric(m);
    const int n = m.n;
    if (n == 0) return IntPolynomial({1});
    // Evaluate det(xI - M) at x = 0..n, then interpolate over the rationals.
    std::vector<BigInt> values;
    for (int t = 0; t <= n; ++t) {
        std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a[static_cast<std::size_t>(i) * n + j] =
                    (i == j ? BigInt(t) : BigInt(0)) - m.at(i, j);
        values.push_back(det_bareiss(std::move(a), n));
    }
    std::vector<Rational> acc(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int t = 0; t <= n; ++t) {
        // Lagrange basis: prod_{j != t} (x - j) / (t - j)
        std::vector<BigInt> num{BigInt(1)};
        BigInt den(1);
        for (int j = 0; j <= n; ++j) {
            if (j == t) continue;
            std::vector<BigInt> next(num.size() + 1, BigInt(0));
            for (std::size_t i = 0; i < num.size(); ++i) {
                next[i] += num[i] * BigInt(-j);
                next[i + 1] += num[i];
            }
            num = std::move(next);
            den *= BigInt(t - j);
        }
        Rational w = Rational(values[static_cast<std::size_t>(t)]) / Rational(den);
        for (std::size_t i = 0; i < num.size(); ++i) acc[i] += w * Rational(num[i]);
    }
    std::vector<BigInt> c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (acc[i].get_den() != 1)
            throw contract_error("interpolated characteristic polynomial is not integral");
        c[i] = acc[i].get_num();
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial dist_charpoly_reference(const Graph& g) { return charpoly_reference(apsp(g)); }

}  // namespace dspectra
