#include "detmld/linalg.hpp"

namespace detmld::linalg {

namespace {

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& v : a[row]) v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t cc = 0; cc < a[r].size(); ++cc)
                if (a[row][cc] != 0) a[r][cc] -= f * a[row][cc];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix a) {
    if (a.empty()) return 0;
    return rref(a, a[0].size()).size();
}

std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix aug(n, Vector(2 * n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw Rejected("inverse needs a square matrix");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    if (rref(aug, n).size() != n) return std::nullopt;
    Matrix inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t num_unknowns) {
    if (a.size() != b.size()) throw Rejected("right-hand side length mismatch");
    Matrix aug(a.size(), Vector(num_unknowns + 1, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < num_unknowns; ++j) aug[i][j] = a[i][j];
        aug[i][num_unknowns] = b[i];
    }
    auto pivots = rref(aug, num_unknowns);
    for (std::size_t r = pivots.size(); r < aug.size(); ++r)
        if (aug[r][num_unknowns] != 0) return std::nullopt;
    Vector x(num_unknowns, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][num_unknowns];
    return x;
}

Vector multiply(const Matrix& a, const Vector& x) {
    Vector y(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (a[i][j] != 0 && x[j] != 0) y[i] += a[i][j] * x[j];
    return y;
}

}  // namespace detmld::linalg
