#include "dspectra/closed_form.hpp"

namespace dspectra {

namespace {

IntPolynomial kh_cubic(long n, long h) {
    return IntPolynomial({-n * h + h * h - 2 * h + 2, 5 - 2 * h - 2 * n * h + 2 * h * h - n,
                          h + 4 - 2 * n, 1});
}

IntPolynomial bridge_quartic(long s, long t) {
    return IntPolynomial({-5 * s * t + 2 * s + 2 * t, 6 * s + 6 * t - 14 * s * t,
                          2 * t + 2 * s - 8 * s * t + 4, 4 - s - t, 1});
}

IntPolynomial glued_cubic(long s, long t) {
    return IntPolynomial({s + t - 2 * s * t, 2 + s + t - 3 * s * t, 4 - s - t, 1});
}

IntPolynomial friendship_quadratic(long k) {
    return IntPolynomial({-2 * k, -(4 * k - 3), 1});
}

// Cone over disjoint cliques of sizes parts[i], with n = 1 + sum(parts):
// (x+1)^(n-k-1) * [ x * prod_i (x + n_i + 1)
//                   - sum_i n_i (2x+1) prod_{j!=i} (x + n_j + 1) ],
// the bracket being the rational eigenvalue equation with all denominators
// cleared symbolically.
IntPolynomial cone_poly(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    long n = 1;
    for (int p : parts) n += p;
    IntPolynomial bracket = monomial(1);  // x
    for (int p : parts) bracket = bracket * IntPolynomial({p + 1, 1});
    for (int i = 0; i < k; ++i) {
        IntPolynomial term({parts[static_cast<std::size_t>(i)]});
        term = term * IntPolynomial({1, 2});  // n_i * (2x + 1)
        for (int j = 0; j < k; ++j)
            if (j != i) term = term * IntPolynomial({parts[static_cast<std::size_t>(j)] + 1, 1});
        bracket = bracket - term;
    }
    return linear_power(1, static_cast<int>(n) - k - 1) * bracket;
}

}  // namespace

IntPolynomial reduced_factor(const FamilySpec& spec) {
    validate_spec(spec);
    switch (spec.kind) {
        case FamilyKind::kh:
            return kh_cubic(spec.n, spec.h);
        case FamilyKind::kst_bridge:
            return bridge_quartic(spec.s, spec.t);
        case FamilyKind::kst_glued:
            return glued_cubic(spec.s, spec.t);
        case FamilyKind::friendship:
            return friendship_quadratic(spec.k);
        default:
            throw unsupported_error("no reduced factor for family " + family_name(spec));
    }
}

IntPolynomial closed_form(const FamilySpec& spec) {
    validate_spec(spec);
    const int n = family_order(spec);
    switch (spec.kind) {
        case FamilyKind::kh:
            return linear_power(1, spec.h - 2) * linear_power(2, n - spec.h - 1) *
                   kh_cubic(spec.n, spec.h);
        case FamilyKind::kst_bridge:
            return linear_power(1, n - 4) * bridge_quartic(spec.s, spec.t);
        case FamilyKind::kst_glued:
            return linear_power(1, n - 3) * glued_cubic(spec.s, spec.t);
        case FamilyKind::friendship:
            return linear_power(1, n - spec.k - 1) * linear_power(3, spec.k - 1) *
                   friendship_quadratic(spec.k);
        case FamilyKind::clique_cone:
            return cone_poly(spec.parts);
        default:
            throw unsupported_error("no closed form for family " + family_name(spec));
    }
}

SignReport sign_conditions(const FamilySpec& spec) {
    validate_spec(spec);
    std::vector<std::pair<Rational, int>> plan;
    switch (spec.kind) {
        case FamilyKind::kh:
            plan = {{Rational(0), -1}, {Rational(-1, 2), -1}, {Rational(-1), 1}, {Rational(-2), 1}};
            break;
        case FamilyKind::kst_bridge:
            plan = {{Rational(0), -1}, {Rational(-1, 2), -1}, {Rational(-1), 1}, {Rational(-2), -1}};
            break;
        case FamilyKind::kst_glued:
            plan = {{Rational(0), -1}, {Rational(-2, 3), -1}, {Rational(-1), 1}};
            break;
        default:
            throw validation_error("sign conditions are defined only for the kh, kst-bridge, and "
                                   "kst-glued families");
    }
    SignReport report;
    report.family = family_name(spec);
    report.factor = reduced_factor(spec);
    report.pass = true;
    for (const auto& [x, expected] : plan) {
        SignCheckpoint cp;
        cp.point = x;
        cp.value = report.factor.eval(x);
        cp.expected_sign = expected;
        cp.computed_sign = sign_of(cp.value);
        cp.ok = (cp.computed_sign == expected);
        report.pass = report.pass && cp.ok;
        report.checkpoints.push_back(std::move(cp));
    }
    return report;
}

RootBracketReport factor_root_brackets(const FamilySpec& spec) {
    auto one = [](Bound lo, Bound hi) {
        return IntervalQuery{Interval{std::move(lo), std::move(hi)}, 1, 1};
    };
    std::vector<IntervalQuery> queries{one(Bound::at(Rational(0)), Bound::plus_inf())};
    switch (spec.kind) {
        case FamilyKind::kh:
            queries.push_back(one(Bound::at(Rational(-1)), Bound::at(Rational(-1, 2))));
            queries.push_back(one(Bound::minus_inf(), Bound::at(Rational(-2))));
            break;
        case FamilyKind::kst_bridge:
            queries.push_back(one(Bound::at(Rational(-1)), Bound::at(Rational(-1, 2))));
            queries.push_back(one(Bound::at(Rational(-2)), Bound::at(Rational(-1))));
            queries.push_back(one(Bound::minus_inf(), Bound::at(Rational(-2))));
            break;
        case FamilyKind::kst_glued:
            queries.push_back(one(Bound::at(Rational(-1)), Bound::at(Rational(-2, 3))));
            queries.push_back(one(Bound::minus_inf(), Bound::at(Rational(-1))));
            break;
        case FamilyKind::friendship:
            queries.push_back(one(Bound::at(Rational(-1)), Bound::at(Rational(0))));
            break;
        default:
            throw unsupported_error("no root localization for family " + family_name(spec));
    }
    return root_brackets(reduced_factor(spec), queries);
}

}  // namespace dspectra
