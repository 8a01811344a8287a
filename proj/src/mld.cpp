#include "detmld/mld.hpp"

namespace detmld::mld {

namespace {

void check_rank(const DeterminantalPair& pair, int q) {
    if (q < 0 || q > pair.k()) throw Rejected("rank q must satisfy 0 <= q <= k");
}

void check_locus(const DeterminantalPair& pair, int j) {
    if (j < 1 || j > pair.k()) throw Rejected("locus index j must satisfy 1 <= j <= k");
}

}  // namespace

std::vector<Rational> beta_coefficients(const DeterminantalPair& pair, int count) {
    if (count < 0 || count > pair.k()) throw Rejected("beta count must satisfy 0 <= count <= k");
    std::vector<Rational> betas;
    betas.reserve(static_cast<std::size_t>(count));
    Rational prefix = 0;
    for (int j = 1; j <= count; ++j) {
        prefix += pair.alpha(j);
        betas.emplace_back(Rational(pair.m() - pair.k() + 2 * j - 1) - prefix);
    }
    return betas;
}

std::optional<LcViolation> first_lc_violation(const DeterminantalPair& pair, int count) {
    Rational prefix = 0;
    for (int j = 1; j <= count; ++j) {
        prefix += pair.alpha(j);
        Rational bound(pair.m() - pair.k() + 2 * j - 1);
        if (prefix > bound) return LcViolation{j, prefix, bound};
    }
    return std::nullopt;
}

bool is_lc_at_rank(const DeterminantalPair& pair, int q) {
    check_rank(pair, q);
    return !first_lc_violation(pair, pair.k() - q);
}

MldValue mld_at_rank(const DeterminantalPair& pair, int q) {
    if (!is_lc_at_rank(pair, q)) return MldValue::neg_infinity();
    const int m = pair.m(), k = pair.k();
    Rational v(q * (m - k) + k * m);
    for (int i = 1; i <= k - q; ++i) v -= (k - q - i + 1) * pair.alpha(i);
    return MldValue::finite(v);
}

bool is_lc_along(const DeterminantalPair& pair, int j) {
    check_locus(pair, j);
    return !first_lc_violation(pair, pair.k());
}

MldValue mld_along(const DeterminantalPair& pair, int j) {
    if (!is_lc_along(pair, j)) return MldValue::neg_infinity();
    Rational v(j * (pair.m() - pair.k() + j));
    for (int i = 1; i <= j; ++i) v -= (j - i + 1) * pair.alpha(i);
    return MldValue::finite(v);
}

bool is_terminal(int m, int k) {
    if (k < 1 || k > m) throw Rejected("terminality needs 1 <= k <= m");
    if (k == m) return true;
    return mld_along(DeterminantalPair(m, k), 1) > MldValue::finite(1);
}

SemicontinuityProfile semicontinuity_profile(const DeterminantalPair& pair) {
    for (const auto& a : pair.alphas())
        if (a < 0) throw Rejected("semicontinuity needs nonnegative coefficients");
    SemicontinuityProfile profile;
    profile.strictly_increasing = true;
    for (int q = 0; q <= pair.k(); ++q) profile.values.push_back(mld_at_rank(pair, q));
    for (int q = 1; q <= pair.k(); ++q) {
        const MldValue& lo = profile.values[static_cast<std::size_t>(q - 1)];
        const MldValue& hi = profile.values[static_cast<std::size_t>(q)];
        Rational expected = Rational(pair.m() - pair.k()) + pair.alpha_prefix(pair.k() - q + 1);
        ProfileStep step{q, MldValue::neg_infinity(), expected, false};
        if (lo.is_finite() && hi.is_finite()) {
            Rational diff = hi.value() - lo.value();
            step.difference = MldValue::finite(diff);
            step.holds = diff == expected && diff > 0;
            if (!(diff > 0)) profile.strictly_increasing = false;
        }
        profile.steps.push_back(step);
    }
    return profile;
}

}  // namespace detmld::mld
