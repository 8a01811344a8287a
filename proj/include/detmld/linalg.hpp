#pragma once

// Dense exact linear algebra over Q, sized for the small systems that arise
// when expanding polynomials in a standard monomial basis.

#include "detmld/rational.hpp"

#include <optional>
#include <vector>

namespace detmld::linalg {

using Matrix = std::vector<std::vector<Rational>>;  // row-major
using Vector = std::vector<Rational>;

std::size_t rank(Matrix a);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Some solution of a x = b (free variables set to zero); nullopt if the
/// system is inconsistent. a has b.size() rows.
std::optional<Vector> solve(const Matrix& a, const Vector& b, std::size_t num_unknowns);

Vector multiply(const Matrix& a, const Vector& x);

}  // namespace detmld::linalg
