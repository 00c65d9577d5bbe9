#include "dspectra/sturm.hpp"

#include <algorithm>

namespace dspectra {

namespace {

// Content-stripping that preserves sign; Sturm chains may only be rescaled by
// positive constants.
IntPolynomial strip_content(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = p.content();
    std::vector<BigInt> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coeffs()[i] / g;
    return IntPolynomial(std::move(c));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& g) {
    std::vector<IntPolynomial> ch;
    ch.push_back(g);
    if (g.degree() >= 1) {
        ch.push_back(strip_content(g.derivative()));
        while (ch.back().degree() >= 1) {
            IntPolynomial r = remainder_primitive(ch[ch.size() - 2], ch.back());
            if (r.is_zero()) break;
            ch.push_back(-r);
        }
    }
    return ch;
}

// Sign variations of the chain at x, zeros skipped. This count, W(x), is
// right-continuous in x, and W(a) - W(b) equals the number of distinct roots
// of the (squarefree) chain head in the half-open interval (a, b].
int variations_at(const std::vector<IntPolynomial>& ch, const Rational& x) {
    int count = 0, prev = 0;
    for (const IntPolynomial& p : ch) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

struct FiniteInterval {
    Rational a, b;
};

// Replaces infinite endpoints by the Cauchy bound of g (no real root of g
// lies at or beyond it). Rejects genuinely empty intervals; returns nullopt
// when the interval is non-empty but lies entirely outside the root range
// (count is then zero).
std::optional<FiniteInterval> finitize(const IntPolynomial& g, const Interval& iv) {
    if (iv.lo.kind == Bound::Kind::pos_inf || iv.hi.kind == Bound::Kind::neg_inf)
        throw contract_error("empty interval");
    if (iv.lo.kind == Bound::Kind::finite && iv.hi.kind == Bound::Kind::finite &&
        iv.lo.value >= iv.hi.value)
        throw contract_error("empty interval");
    Rational bound = cauchy_root_bound(g);
    FiniteInterval f;
    f.a = (iv.lo.kind == Bound::Kind::neg_inf) ? Rational(-bound) : iv.lo.value;
    f.b = (iv.hi.kind == Bound::Kind::pos_inf) ? bound : iv.hi.value;
    if (f.a >= f.b) return std::nullopt;  // beyond the root range on one side
    return f;
}

// Distinct roots of squarefree g in the open interval (a, b):
// W(a) - W(b) - [g(b) = 0].
long open_count(const std::vector<IntPolynomial>& ch, const Rational& a, const Rational& b) {
    long w = variations_at(ch, a) - variations_at(ch, b);
    if (ch.front().sign_at(b) == 0) --w;
    return w;
}

}  // namespace

std::string Bound::to_string() const {
    switch (kind) {
        case Kind::neg_inf: return "-inf";
        case Kind::pos_inf: return "+inf";
        case Kind::finite: return dspectra::to_string(value);
    }
    return "";
}

Rational cauchy_root_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw contract_error("root bound of the zero polynomial");
    if (p.degree() == 0) return Rational(1);
    Rational lead(abs(p.leading()));
    Rational best(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = Rational(abs(p.coeff(i))) / lead;
        if (q > best) best = q;
    }
    return best + 1;
}

long count_distinct_roots(const IntPolynomial& p, const Interval& iv) {
    if (p.is_zero()) throw contract_error("root count of the zero polynomial");
    if (p.degree() == 0) {
        finitize(p, iv);  // still reject empty intervals
        return 0;
    }
    IntPolynomial g = squarefree_part(p);
    std::optional<FiniteInterval> f = finitize(g, iv);
    if (!f) return 0;
    return open_count(sturm_chain(g), f->a, f->b);
}

long count_roots_with_multiplicity(const IntPolynomial& p, const Interval& iv) {
    if (p.is_zero()) throw contract_error("root count of the zero polynomial");
    long total = 0;
    bool any = false;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        total += mult * count_distinct_roots(g, iv);
        any = true;
    }
    if (!any) finitize(p, iv);  // constant polynomial: validate the interval
    return total;
}

RootBracketReport root_brackets(const IntPolynomial& p, const std::vector<IntervalQuery>& queries) {
    if (p.is_zero()) throw contract_error("root brackets of the zero polynomial");
    RootBracketReport report;
    report.poly = p;
    for (const IntervalQuery& q : queries) {
        IntervalCount c;
        c.iv = q.iv;
        c.expect_distinct = q.expect_distinct;
        c.expect_with_multiplicity = q.expect_with_multiplicity;
        c.distinct = count_distinct_roots(p, q.iv);
        c.with_multiplicity = count_roots_with_multiplicity(p, q.iv);
        c.ok = (!q.expect_distinct || *q.expect_distinct == c.distinct) &&
               (!q.expect_with_multiplicity || *q.expect_with_multiplicity == c.with_multiplicity);
        report.pass = report.pass && c.ok;
        report.intervals.push_back(std::move(c));
    }
    return report;
}

namespace {

// All real roots of a squarefree polynomial, as rationals within 2^-49 of the
// true root (exact when the root itself is rational).
std::vector<Rational> roots_of_squarefree(const IntPolynomial& g) {
    std::vector<Rational> out;
    if (g.degree() < 1) return out;
    std::vector<IntPolynomial> ch = sturm_chain(g);
    Rational bound = cauchy_root_bound(g);
    const Rational width_goal = Rational(1, BigInt(1) << 48);

    struct Segment {
        Rational a, b;
        long count;
    };
    std::vector<Segment> stack;
    long total = open_count(ch, -bound, bound);
    stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        if (seg.count == 0) continue;
        if (seg.count == 1) {
            // Refine the isolated root by Sturm-count bisection.
            Rational a = seg.a, b = seg.b;
            bool exact = false;
            while (b - a > width_goal) {
                Rational m = (a + b) / 2;
                if (ch.front().sign_at(m) == 0) {
                    out.push_back(m);
                    exact = true;
                    break;
                }
                if (open_count(ch, a, m) == 1)
                    b = m;
                else
                    a = m;
            }
            if (!exact) out.push_back((a + b) / 2);
            continue;
        }
        Rational m = (seg.a + seg.b) / 2;
        bool mid_root = (ch.front().sign_at(m) == 0);
        if (mid_root) out.push_back(m);
        long left = open_count(ch, seg.a, m);
        long right = seg.count - left - (mid_root ? 1 : 0);
        stack.push_back({seg.a, m, left});
        stack.push_back({m, seg.b, right});
    }
    return out;
}

}  // namespace

std::vector<double> exact_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw contract_error("roots of the zero polynomial");
    std::vector<double> out;
    for (const auto& [g, mult] : squarefree_decomposition(p)) {
        for (const Rational& r : roots_of_squarefree(g)) {
            double v = r.get_d();
            for (int i = 0; i < mult; ++i) out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

int rational_root_multiplicity(const IntPolynomial& p, const Rational& c) {
    if (p.is_zero()) throw contract_error("root multiplicity in the zero polynomial");
    IntPolynomial lin(std::vector<BigInt>{BigInt(-c.get_num()), BigInt(c.get_den())});
    IntPolynomial cur = p;
    int m = 0;
    while (cur.degree() >= 1 && cur.eval(c) == 0) {
        cur = divide_exact(cur, lin);
        ++m;
    }
    return m;
}

}  // namespace dspectra
