#pragma once

// Sparse multivariate polynomials over Q in the m^2 matrix entries x_ij,
// minors of the generic matrix, and truncated power series in one variable t.
//
// Variable layout: x_ij (1-based) has index (i-1)*m + (j-1), so index order
// is the lexicographic order on {1..m} x {1..m}.

#include "detmld/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace detmld {

using Exponent = std::vector<std::uint16_t>;

/// Row indices and column indices of a square minor; both sorted, 1-based.
class MinorIndex {
public:
    /// Sorts the inputs; rejects unequal sizes or repeated indices.
    MinorIndex(std::vector<int> rows, std::vector<int> cols);

    const std::vector<int>& rows() const { return rows_; }
    const std::vector<int>& cols() const { return cols_; }
    std::size_t size() const { return rows_.size(); }

    /// Throws Rejected if any index lies outside [1, m].
    void check_range(int m) const;

    friend auto operator<=>(const MinorIndex&, const MinorIndex&) = default;

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
};

class MultiPoly {
public:
    using Terms = std::map<Exponent, Rational>;

    /// The zero polynomial in m^2 variables.
    explicit MultiPoly(int m);

    static MultiPoly constant(int m, const Rational& c);
    /// x_ij, 1-based.
    static MultiPoly variable(int m, int i, int j);

    int m() const { return m_; }
    std::size_t num_vars() const { return static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * monomial; drops the term if the result is zero.
    void add_term(const Exponent& e, const Rational& c);
    Rational coefficient(const Exponent& e) const;

    /// Common total degree of all terms; nullopt if not homogeneous. The zero
    /// polynomial reports degree 0.
    std::optional<int> homogeneous_degree() const;
    int total_degree() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator-() const { return *this * Rational(-1); }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string to_string() const;

private:
    void check_layout(const MultiPoly& o) const;

    int m_;
    Terms terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned n);

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

/// Determinant of the submatrix of (x_ij) on the given rows and columns
/// (cofactor expansion, memoized on index sets).
MultiPoly minor_poly(const MinorIndex& idx, int m);

/// Row sums and column sums of an exponent matrix; the bigrading of R.
struct Bicontent {
    std::vector<int> rows;
    std::vector<int> cols;
    friend auto operator<=>(const Bicontent&, const Bicontent&) = default;
};

Bicontent bicontent_of(const Exponent& e, int m);

/// Power series in t truncated above t^N, stored densely.
class TruncatedSeries {
public:
    TruncatedSeries(int N);
    /// t^e, which is zero when e > N.
    static TruncatedSeries monomial(int N, std::uint64_t e, const Rational& c = 1);

    int truncation() const { return N_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational& operator[](int i) { return coeffs_.at(static_cast<std::size_t>(i)); }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

    /// Smallest exponent with a nonzero coefficient; nullopt if zero mod t^{N+1}.
    std::optional<int> order() const;
    bool is_zero() const { return !order(); }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    void check_truncation(const TruncatedSeries& o) const;

    int N_;
    std::vector<Rational> coeffs_;
};

using SeriesMatrix = std::vector<std::vector<TruncatedSeries>>;

/// Evaluates p at x_ij = assignment[i-1][j-1], modulo t^{N+1}. All entries
/// must share truncation N.
TruncatedSeries substitute_series(const MultiPoly& p, const SeriesMatrix& assignment, int N);

/// Minor of a matrix of series, by cofactor expansion.
TruncatedSeries series_minor(const SeriesMatrix& a, const MinorIndex& idx, int N);

}  // namespace detmld
