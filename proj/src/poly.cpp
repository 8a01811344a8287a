#include "detmld/poly.hpp"

#include <algorithm>
#include <sstream>

namespace detmld {

MinorIndex::MinorIndex(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
    if (rows_.size() != cols_.size()) throw Rejected("minor needs equally many rows and columns");
    std::sort(rows_.begin(), rows_.end());
    std::sort(cols_.begin(), cols_.end());
    if (std::adjacent_find(rows_.begin(), rows_.end()) != rows_.end() ||
        std::adjacent_find(cols_.begin(), cols_.end()) != cols_.end())
        throw Rejected("minor indices must be distinct");
}

void MinorIndex::check_range(int m) const {
    auto bad = [m](int v) { return v < 1 || v > m; };
    if (std::any_of(rows_.begin(), rows_.end(), bad) || std::any_of(cols_.begin(), cols_.end(), bad))
        throw Rejected("minor index out of range [1, " + std::to_string(m) + "]");
}

MultiPoly::MultiPoly(int m) : m_(m) {
    if (m < 1) throw Rejected("polynomial ring needs m >= 1");
}

MultiPoly MultiPoly::constant(int m, const Rational& c) {
    MultiPoly p(m);
    p.add_term(Exponent(p.num_vars(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int m, int i, int j) {
    if (i < 1 || i > m || j < 1 || j > m) throw Rejected("variable index out of range");
    MultiPoly p(m);
    Exponent e(p.num_vars(), 0);
    e[static_cast<std::size_t>((i - 1) * m + (j - 1))] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != num_vars()) throw Rejected("exponent vector has the wrong length");
    const Rational v = canonical(c);
    if (v == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

int degree_of(const Exponent& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

}  // namespace

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) != d) return std::nullopt;
    return d;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
}

void MultiPoly::check_layout(const MultiPoly& o) const {
    if (o.m_ != m_) throw Rejected("polynomials live in different rings (m mismatch)");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_layout(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_layout(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_layout(b);
    MultiPoly r(a.m_);
    Exponent e(a.num_vars());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint16_t>(ea[v] + eb[v]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly pow(const MultiPoly& p, unsigned n) {
    MultiPoly result = MultiPoly::constant(p.m(), 1);
    MultiPoly base = p;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest monomials first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = std::any_of(e.begin(), e.end(), [](auto v) { return v > 0; });
        bool need_coef = mag != 1 || !has_var;
        if (need_coef) os << detmld::to_string(mag);
        bool sep = need_coef;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (!e[v]) continue;
            if (sep) os << '*';
            sep = true;
            int i = static_cast<int>(v) / m_ + 1, j = static_cast<int>(v) % m_ + 1;
            if (m_ <= 9)
                os << 'x' << i << j;
            else
                os << "x_" << i << '_' << j;
            if (e[v] > 1) os << '^' << e[v];
        }
    }
    return os.str();
}

namespace {

using MinorMemo = std::map<std::pair<std::vector<int>, std::vector<int>>, MultiPoly>;

MultiPoly minor_rec(const std::vector<int>& rows, const std::vector<int>& cols, int m, MinorMemo& memo) {
    if (rows.empty()) return MultiPoly::constant(m, 1);
    if (rows.size() == 1) return MultiPoly::variable(m, rows[0], cols[0]);
    auto key = std::make_pair(rows, cols);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // Expand along the first row.
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    MultiPoly det(m);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<int> sub_cols;
        sub_cols.reserve(cols.size() - 1);
        for (std::size_t d = 0; d < cols.size(); ++d)
            if (d != c) sub_cols.push_back(cols[d]);
        MultiPoly term = MultiPoly::variable(m, rows[0], cols[c]) * minor_rec(sub_rows, sub_cols, m, memo);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    memo.emplace(std::move(key), det);
    return det;
}

}  // namespace

MultiPoly minor_poly(const MinorIndex& idx, int m) {
    idx.check_range(m);
    MinorMemo memo;
    return minor_rec(idx.rows(), idx.cols(), m, memo);
}

Bicontent bicontent_of(const Exponent& e, int m) {
    Bicontent b{std::vector<int>(static_cast<std::size_t>(m), 0), std::vector<int>(static_cast<std::size_t>(m), 0)};
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int v = e[static_cast<std::size_t>(i * m + j)];
            b.rows[static_cast<std::size_t>(i)] += v;
            b.cols[static_cast<std::size_t>(j)] += v;
        }
    return b;
}

// ---------------------------------------------------------------------------
// Truncated series

TruncatedSeries::TruncatedSeries(int N) : N_(N) {
    if (N < 0) throw Rejected("truncation order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(N) + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::monomial(int N, std::uint64_t e, const Rational& c) {
    TruncatedSeries s(N);
    if (e <= static_cast<std::uint64_t>(N)) s.coeffs_[e] = canonical(c);
    return s;
}

std::optional<int> TruncatedSeries::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return std::nullopt;
}

void TruncatedSeries::check_truncation(const TruncatedSeries& o) const {
    if (o.N_ != N_) throw Rejected("truncation mismatch between series");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check_truncation(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    check_truncation(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_truncation(b);
    TruncatedSeries r(a.N_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < a.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncatedSeries operator*(TruncatedSeries a, const Rational& c) {
    for (auto& v : a.coeffs_) v *= c;
    return a;
}

TruncatedSeries substitute_series(const MultiPoly& p, const SeriesMatrix& assignment, int N) {
    const auto m = static_cast<std::size_t>(p.m());
    if (assignment.size() != m) throw Rejected("assignment must be an m x m matrix");
    for (const auto& row : assignment) {
        if (row.size() != m) throw Rejected("assignment must be an m x m matrix");
        for (const auto& s : row)
            if (s.truncation() != N) throw Rejected("truncation mismatch in assignment");
    }
    TruncatedSeries total(N);
    for (const auto& [e, c] : p.terms()) {
        TruncatedSeries term = TruncatedSeries::monomial(N, 0, c);
        for (std::size_t v = 0; v < e.size() && !term.is_zero(); ++v)
            for (unsigned r = 0; r < e[v]; ++r) term = term * assignment[v / m][v % m];
        total += term;
    }
    return total;
}

namespace {

TruncatedSeries series_minor_rec(const SeriesMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols,
                                 int N) {
    if (rows.empty()) return TruncatedSeries::monomial(N, 0);
    if (rows.size() == 1)
        return a[static_cast<std::size_t>(rows[0] - 1)][static_cast<std::size_t>(cols[0] - 1)];
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    TruncatedSeries det(N);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto& entry = a[static_cast<std::size_t>(rows[0] - 1)][static_cast<std::size_t>(cols[c] - 1)];
        if (entry.is_zero()) continue;
        std::vector<int> sub_cols;
        for (std::size_t d = 0; d < cols.size(); ++d)
            if (d != c) sub_cols.push_back(cols[d]);
        TruncatedSeries term = entry * series_minor_rec(a, sub_rows, sub_cols, N);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

TruncatedSeries series_minor(const SeriesMatrix& a, const MinorIndex& idx, int N) {
    idx.check_range(static_cast<int>(a.size()));
    return series_minor_rec(a, idx.rows(), idx.cols(), N);
}

}  // namespace detmld
