#include "detmld/oracle.hpp"

#include "detmld/mld.hpp"
#include "detmld/orbit.hpp"
#include "detmld/poly.hpp"

#include <random>

namespace detmld::oracle {

namespace {

Rational as_rational(std::uint64_t v) { return Rational(static_cast<unsigned long>(v)); }

void check_target(const DeterminantalPair& pair, Target target) {
    if (target.kind == Target::Kind::point) {
        if (target.index < 0 || target.index > pair.k()) throw Rejected("rank q must satisfy 0 <= q <= k");
    } else if (target.index < 1 || target.index > pair.k()) {
        throw Rejected("locus index j must satisfy 1 <= j <= k");
    }
}

/// Number of leading tail coordinates that the target leaves free.
int free_coordinates(const DeterminantalPair& pair, Target target) {
    return target.kind == Target::Kind::point ? pair.k() - target.index : pair.k();
}

ExtendedPartition with_infinite_prefix(const DeterminantalPair& pair, const std::vector<std::uint64_t>& tail) {
    std::vector<ExtNat> entries(static_cast<std::size_t>(pair.m() - pair.k()), INF);
    for (auto v : tail) entries.emplace_back(v);
    return ExtendedPartition(std::move(entries));
}

struct Search {
    const DeterminantalPair& pair;
    Target target;
    std::uint64_t L;
    std::vector<std::uint64_t> tail;
    OracleResult result;
    bool have_min = false;

    /// Smallest admissible value at tail position pos (0-based).
    std::uint64_t lower_bound(int pos) const {
        if (target.kind == Target::Kind::point) return pos < pair.k() - target.index ? 1 : 0;
        return pos < target.index ? 1 : 0;
    }
    std::uint64_t upper_bound(int pos) const {
        if (target.kind == Target::Kind::point && pos >= pair.k() - target.index) return 0;
        return pos == 0 ? L : tail[static_cast<std::size_t>(pos - 1)];
    }

    void visit() {
        ++result.visited;
        Rational value = em_objective(pair, with_infinite_prefix(pair, tail), target);
        if (!have_min || value < result.box_minimum) {
            have_min = true;
            result.box_minimum = value;
            result.argmin = tail;
        }
    }

    void recurse(int pos) {
        if (pos == pair.k()) {
            visit();
            return;
        }
        const std::uint64_t lo = lower_bound(pos), hi = upper_bound(pos);
        for (std::uint64_t v = hi + 1; v-- > lo;) {
            tail[static_cast<std::size_t>(pos)] = v;
            recurse(pos + 1);
        }
    }
};

Rational random_invertible(std::mt19937_64& rng, int m, std::vector<std::vector<Rational>>& out) {
    std::uniform_int_distribution<int> dist(-3, 3);
    for (;;) {
        out.assign(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
        for (auto& row : out)
            for (auto& v : row) v = dist(rng);
        // Determinant by elimination over Q.
        auto a = out;
        Rational det = 1;
        for (std::size_t c = 0; c < a.size(); ++c) {
            std::size_t p = c;
            while (p < a.size() && a[p][c] == 0) ++p;
            if (p == a.size()) {
                det = 0;
                break;
            }
            if (p != c) {
                std::swap(a[p], a[c]);
                det = -det;
            }
            det *= a[c][c];
            for (std::size_t r = c + 1; r < a.size(); ++r) {
                Rational f = a[r][c] / a[c][c];
                for (std::size_t cc = c; cc < a.size(); ++cc) a[r][cc] -= f * a[c][cc];
            }
        }
        if (det != 0) return det;
    }
}

}  // namespace

Rational em_objective(const DeterminantalPair& pair, const ExtendedPartition& lambda, Target target) {
    check_target(pair, target);
    if (!orbit::in_jet_space(lambda, pair)) throw Rejected("orbit is not contained in the jet space of D^k");
    if (!orbit::has_finite_codim(lambda, pair)) throw Rejected("objective needs a finite tail");
    const int m = pair.m(), k = pair.k();
    std::uint64_t codim = 0;
    if (target.kind == Target::Kind::point) {
        if (!orbit::meets_point_fiber(lambda, pair, target.index))
            throw Rejected("partition does not meet the fiber over x_q");
        codim = orbit::codim_point(lambda, pair, target.index);
    } else {
        for (int l = m - k + 1; l <= m - k + target.index; ++l)
            if (lambda[l] == ExtNat(0)) throw Rejected("partition does not lie over D^{k-j}");
        codim = orbit::codim(lambda, pair);
    }
    Rational value = as_rational(codim);
    value -= as_rational(orbit::nash_contact_order(lambda, pair).value());
    for (int i = 1; i <= k; ++i) {
        auto w = orbit::contact_order_subvariety(lambda, pair, i).value();
        value -= pair.alpha(i) * as_rational(w);
    }
    return value;
}

OracleResult minimize_em_objective(const DeterminantalPair& pair, Target target, std::uint64_t L) {
    if (L < 1) throw Rejected("search bound L must be at least 1");
    check_target(pair, target);
    Search search{pair, target, L, std::vector<std::uint64_t>(static_cast<std::size_t>(pair.k()), 0), {}};
    search.recurse(0);

    OracleResult result = std::move(search.result);
    for (auto v : result.argmin)
        if (v == L) result.at_boundary = true;

    // A nonincreasing tail is a nonnegative combination of the vectors
    // (1^t, 0^{k-t}); the objective is linear with slope beta_1 + ... + beta_t
    // along each, so it is unbounded below exactly when one such slope
    // available to the target is negative.
    const int free = free_coordinates(pair, target);
    auto betas = mld::beta_coefficients(pair, free);
    Rational prefix = 0;
    for (const auto& b : betas) {
        prefix += b;
        if (prefix < 0) result.prefix_unbounded = true;
    }
    result.minimum = result.prefix_unbounded ? MldValue::neg_infinity() : MldValue::finite(result.box_minimum);
    return result;
}

OracleComparison mld_via_oracle(const DeterminantalPair& pair, Target target, std::uint64_t L) {
    OracleComparison cmp;
    cmp.oracle = minimize_em_objective(pair, target, L);
    cmp.closed_form = target.kind == Target::Kind::point ? mld::mld_at_rank(pair, target.index)
                                                         : mld::mld_along(pair, target.index);
    cmp.agree = cmp.oracle.minimum == cmp.closed_form;
    return cmp;
}

std::optional<std::uint64_t> ord_ideal_powerseries(const std::vector<ExtNat>& lambda, int m, int s, int N,
                                                   const SeriesOrderOptions& options) {
    if (m < 1 || lambda.size() != static_cast<std::size_t>(m)) throw Rejected("lambda must have length m");
    if (s < 1 || s > m) throw Rejected("minor size s must satisfy 1 <= s <= m");
    if (N < 0) throw Rejected("truncation N must be nonnegative");
    std::uint64_t finite_sum = 0;
    for (auto v : lambda)
        if (v.is_finite()) finite_sum += v.value();
    if (finite_sum > static_cast<std::uint64_t>(N)) throw Rejected("truncation N must be at least the sum of the finite entries");

    const auto um = static_cast<std::size_t>(m);
    auto exponent = [&](std::size_t l) -> std::uint64_t {
        return lambda[l].is_inf() ? static_cast<std::uint64_t>(N) + 1 : lambda[l].value();
    };

    SeriesMatrix a(um, std::vector<TruncatedSeries>(um, TruncatedSeries(N)));
    if (options.conjugation_seed) {
        std::mt19937_64 rng(*options.conjugation_seed);
        std::vector<std::vector<Rational>> g, h;
        random_invertible(rng, m, g);
        random_invertible(rng, m, h);
        for (std::size_t i = 0; i < um; ++i)
            for (std::size_t j = 0; j < um; ++j)
                for (std::size_t l = 0; l < um; ++l)
                    a[i][j] += TruncatedSeries::monomial(N, exponent(l), g[i][l] * h[l][j]);
    } else {
        for (std::size_t l = 0; l < um; ++l) a[l][l] = TruncatedSeries::monomial(N, exponent(l));
    }

    std::optional<std::uint64_t> best;
    std::vector<int> rows(static_cast<std::size_t>(s));
    std::vector<int> cols(static_cast<std::size_t>(s));
    // Enumerate s-subsets of {1..m} for rows and columns.
    auto first = [&](std::vector<int>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i) + 1;
    };
    auto next = [&](std::vector<int>& v) {
        for (std::size_t i = v.size(); i-- > 0;) {
            if (v[i] < m - static_cast<int>(v.size() - 1 - i)) {
                ++v[i];
                for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = v[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    first(rows);
    do {
        first(cols);
        do {
            auto ord = series_minor(a, MinorIndex(rows, cols), N).order();
            if (ord && (!best || static_cast<std::uint64_t>(*ord) < *best)) best = static_cast<std::uint64_t>(*ord);
        } while (next(cols));
    } while (next(rows));
    return best;
}

}  // namespace detmld::oracle
