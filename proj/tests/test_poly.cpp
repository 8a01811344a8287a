#include "detmld/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace detmld;

namespace {

MultiPoly x(int m, int i, int j) { return MultiPoly::variable(m, i, j); }

/// Determinant by the Leibniz permutation sum.
MultiPoly leibniz(const std::vector<int>& rows, const std::vector<int>& cols, int m) {
    std::vector<int> perm(cols.size());
    std::iota(perm.begin(), perm.end(), 0);
    MultiPoly det(m);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
        MultiPoly term = MultiPoly::constant(m, inversions % 2 ? -1 : 1);
        for (std::size_t r = 0; r < rows.size(); ++r)
            term = term * x(m, rows[r], cols[static_cast<std::size_t>(perm[r])]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

std::vector<std::vector<int>> subsets(int n, int s) {
    std::vector<std::vector<int>> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != s) continue;
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i + 1);
        out.push_back(v);
    }
    return out;
}

MultiPoly random_poly(std::mt19937_64& rng, int m, int terms, int max_exp) {
    MultiPoly p(m);
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<std::size_t>(m * m), 0);
        for (auto& v : e) v = static_cast<std::uint16_t>(rng() % static_cast<unsigned>(max_exp + 1));
        p.add_term(e, Rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    const int m = 2;
    auto a = x(m, 1, 1) + x(m, 1, 2);
    auto b = x(m, 1, 1) - x(m, 1, 2);
    CHECK(a * b == x(m, 1, 1) * x(m, 1, 1) - x(m, 1, 2) * x(m, 1, 2));
    CHECK(a + MultiPoly(m) == a);
    CHECK(pow(x(m, 1, 1), 3) == x(m, 1, 1) * x(m, 1, 1) * x(m, 1, 1));
    CHECK(pow(a, 0) == MultiPoly::constant(m, 1));
    CHECK((a - a).is_zero());
    CHECK((a * Rational(0)).is_zero());
    CHECK(a.to_string() == "x11 + x12");
    CHECK_THROWS_AS(a + x(3, 1, 1), Rejected);
    CHECK_THROWS_AS(a * x(3, 1, 1), Rejected);
    CHECK_THROWS_AS(MultiPoly::variable(2, 3, 1), Rejected);
}

TEST_CASE("no zero coefficients are stored; homogeneity") {
    const int m = 2;
    MultiPoly p = x(m, 1, 1) * x(m, 2, 2) - x(m, 1, 2) * x(m, 2, 1);
    for (const auto& [e, c] : p.terms()) {
        CHECK(c != 0);
        CHECK(e.size() == 4);
    }
    CHECK(p.homogeneous_degree() == std::optional<int>(2));
    CHECK_FALSE((p + x(m, 1, 1)).homogeneous_degree().has_value());
    CHECK(MultiPoly(m).homogeneous_degree() == std::optional<int>(0));
    CHECK((p + x(m, 1, 1)).total_degree() == 2);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_poly(rng, 2, 4, 2), b = random_poly(rng, 2, 4, 2), c = random_poly(rng, 2, 3, 2);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(pow(a, 2) == a * a);
    }
}

TEST_CASE("minor_poly") {
    const int m = 2;
    CHECK(minor_poly(MinorIndex({1, 2}, {1, 2}), m) == x(m, 1, 1) * x(m, 2, 2) - x(m, 1, 2) * x(m, 2, 1));
    CHECK(minor_poly(MinorIndex({2}, {1}), m) == x(m, 2, 1));
    CHECK(minor_poly(MinorIndex({}, {}), m) == MultiPoly::constant(m, 1));
    CHECK_THROWS_AS(MinorIndex({1, 1}, {1, 2}), Rejected);
    CHECK_THROWS_AS(MinorIndex({1}, {1, 2}), Rejected);
    CHECK_THROWS_AS(minor_poly(MinorIndex({1, 3}, {1, 2}), m), Rejected);
    // Index sets are read as sets.
    CHECK(MinorIndex({2, 1}, {1, 2}) == MinorIndex({1, 2}, {1, 2}));
}

TEST_CASE("minor_poly agrees with the Leibniz formula") {
    for (int m = 1; m <= 4; ++m)
        for (int s = 1; s <= m; ++s)
            for (const auto& rows : subsets(m, s))
                for (const auto& cols : subsets(m, s)) CHECK(minor_poly(MinorIndex(rows, cols), m) == leibniz(rows, cols, m));
}

TEST_CASE("cofactor expansion along every row is consistent") {
    const int m = 3;
    std::vector<int> all{1, 2, 3};
    MultiPoly det = minor_poly(MinorIndex(all, all), m);
    for (int r = 1; r <= m; ++r) {
        MultiPoly sum(m);
        for (int c = 1; c <= m; ++c) {
            std::vector<int> rows, cols;
            for (int v : all) {
                if (v != r) rows.push_back(v);
                if (v != c) cols.push_back(v);
            }
            MultiPoly term = x(m, r, c) * minor_poly(MinorIndex(rows, cols), m);
            sum += (r + c) % 2 ? -term : term;
        }
        CHECK(sum == det);
    }
}

TEST_CASE("bicontent") {
    const int m = 2;
    auto p = x(m, 1, 2) * x(m, 2, 2);
    auto bc = bicontent_of(p.terms().begin()->first, m);
    CHECK(bc.rows == std::vector<int>{1, 1});
    CHECK(bc.cols == std::vector<int>{0, 2});
}

TEST_CASE("truncated series") {
    const int N = 5;
    auto t2 = TruncatedSeries::monomial(N, 2);
    auto t3 = TruncatedSeries::monomial(N, 3, 4);
    CHECK((t2 * t3).order() == std::optional<int>(5));
    CHECK((t3 * t3).is_zero());
    CHECK(TruncatedSeries::monomial(N, 9).is_zero());
    CHECK((t2 + t3).order() == std::optional<int>(2));
    CHECK((t2 - t2).is_zero());
    CHECK_THROWS_AS(t2 + TruncatedSeries::monomial(4, 1), Rejected);
    CHECK_THROWS_AS(TruncatedSeries(-1), Rejected);
}

TEST_CASE("t-order is multiplicative below the truncation") {
    std::mt19937_64 rng(29);
    const int N = 12;
    for (int trial = 0; trial < 200; ++trial) {
        TruncatedSeries a(N), b(N);
        int oa = static_cast<int>(rng() % 5), ob = static_cast<int>(rng() % 5);
        a[oa] = 1 + static_cast<long>(rng() % 5);
        b[ob] = -1 - static_cast<long>(rng() % 5);
        for (int i = oa + 1; i <= N; ++i) a[i] = static_cast<long>(rng() % 7) - 3;
        for (int i = ob + 1; i <= N; ++i) b[i] = static_cast<long>(rng() % 7) - 3;
        CHECK((a * b).order() == std::optional<int>(oa + ob));
    }
}

TEST_CASE("series minors match substitution into minor_poly") {
    std::mt19937_64 rng(31);
    const int m = 3, N = 6;
    for (int trial = 0; trial < 10; ++trial) {
        SeriesMatrix a(3, std::vector<TruncatedSeries>(3, TruncatedSeries(N)));
        for (auto& row : a)
            for (auto& s : row)
                for (int i = 0; i <= N; ++i) s[i] = static_cast<long>(rng() % 5) - 2;
        for (int sz = 1; sz <= m; ++sz)
            for (const auto& rows : subsets(m, sz))
                for (const auto& cols : subsets(m, sz)) {
                    MinorIndex idx(rows, cols);
                    CHECK(series_minor(a, idx, N) == substitute_series(minor_poly(idx, m), a, N));
                }
    }
    SeriesMatrix wrong(3, std::vector<TruncatedSeries>(3, TruncatedSeries(N + 1)));
    CHECK_THROWS_AS(substitute_series(x(m, 1, 1), wrong, N), Rejected);
}
