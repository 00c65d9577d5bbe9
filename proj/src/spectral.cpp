#include "dspectra/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "dspectra/charpoly.hpp"
#include "dspectra/sturm.hpp"

namespace dspectra {

namespace {

double off_diagonal_mass(const std::vector<double>& a, int n) {
    double s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double v = a[static_cast<std::size_t>(i) * n + j];
            s += 2 * v * v;
        }
    return std::sqrt(s);
}

}  // namespace

Spectrum eigenvalues(const DistanceMatrix& d, double tol) {
    if (tol <= 0) throw contract_error("eigenvalue tolerance must be positive");
    const int n = d.n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d.at(i, j) != d.at(j, i)) throw contract_error("matrix is not symmetric");

    std::vector<double> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = d.at(i, j);

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double prev_off = std::numeric_limits<double>::infinity();
    const int max_sweeps = 128;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = off_diagonal_mass(a, n);
        if (off < tol) break;
        // Stagnation guard: exact Jacobi strictly decreases the off-diagonal
        // mass, so a non-improving sweep means the floating-point floor.
        if (off >= prev_off) break;
        prev_off = off;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double app = at(p, p), aqq = at(q, q);
                double tau = (aqq - app) / (2 * apq);
                double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1 + tau * tau))
                                    : 1.0 / (tau - std::sqrt(1 + tau * tau));
                double c = 1.0 / std::sqrt(1 + t * t), s = t * c;
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    double arp = at(r, p), arq = at(r, q);
                    at(r, p) = at(p, r) = c * arp - s * arq;
                    at(r, q) = at(q, r) = s * arp + c * arq;
                }
            }
    }

    Spectrum out;
    out.tol = tol;
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = at(i, i);
    std::sort(out.values.begin(), out.values.end(), std::greater<double>());
    return out;
}

Spectrum eigenvalues(const Graph& g, double tol) { return eigenvalues(apsp(g), tol); }

bool interlacing_check(const Spectrum& parent, const Spectrum& child, double tol) {
    const std::size_t n = parent.values.size(), m = child.values.size();
    if (m > n) throw contract_error("child spectrum longer than parent spectrum");
    for (std::size_t i = 0; i < m; ++i) {
        double mu = child.values[i];
        if (mu > parent.values[i] + tol) return false;
        if (mu < parent.values[n - m + i] - tol) return false;
    }
    return true;
}

int multiplicity(const Spectrum& s, double value, double cluster_tol) {
    if (cluster_tol <= 0) throw contract_error("cluster tolerance must be positive");
    int count = 0;
    for (double v : s.values)
        if (std::abs(v - value) <= cluster_tol) ++count;
    return count;
}

MultipartiteReport multipartite_characterization_check(const Graph& g) {
    if (!is_connected(g)) throw contract_error("graph must be connected");
    const int n = g.n;
    MultipartiteReport report;

    // Structural side: complement splits into cliques.
    Graph co = complement(g);
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[static_cast<std::size_t>(v)] >= 0) continue;
        std::vector<int> stack{v};
        comp[static_cast<std::size_t>(v)] = ncomp;
        std::vector<int> members;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (std::uint64_t m = co.neighbors(u); m; m &= m - 1) {
                int w = std::countr_zero(m);
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        bool clique = true;
        for (std::size_t i = 0; i < members.size() && clique; ++i)
            for (std::size_t j = i + 1; j < members.size() && clique; ++j)
                if (!co.has_edge(members[i], members[j])) clique = false;
        if (!clique) {
            report.complement_is_clique_union = false;
            report.parts.clear();
            break;
        }
        report.complement_is_clique_union = true;
        report.parts.push_back(static_cast<int>(members.size()));
        ++ncomp;
    }
    if (report.complement_is_clique_union) {
        report.k = ncomp;
        std::sort(report.parts.begin(), report.parts.end(), std::greater<int>());
        report.structural = (ncomp >= 2 && ncomp <= n - 1);
    }

    // Spectral side, exact: -2 is a root and nothing lies below it.
    IntPolynomial p = dist_charpoly(g);
    report.minus_two_multiplicity = rational_root_multiplicity(p, Rational(-2));
    bool nothing_below = count_distinct_roots(
                             p, Interval{Bound::minus_inf(), Bound::at(Rational(-2))}) == 0;
    report.spectral = (report.minus_two_multiplicity >= 1) && nothing_below;

    Spectrum s = eigenvalues(g);
    report.lambda_min = s.values.empty() ? 0.0 : s.values.back();

    if (report.structural && report.spectral)
        report.agree = (report.minus_two_multiplicity == n - report.k);
    else
        report.agree = (!report.structural && !report.spectral);
    return report;
}

}  // namespace dspectra
