#pragma once

// Standard monomial theory on R = Q[x_ij] and R_k = R / I_{k+1}.
//
// A double tableau (S|T) stands for the product over its rows of the minor
// with row indices taken from the row of S and column indices from the row of
// T (each row read as a set). A tableau is standard when every row strictly
// increases and every column weakly increases. Standard bideterminants form a
// basis of R; those with first row longer than k span I_{k+1}, so the ones
// with all rows of length <= k give a basis of R_k.
//
// Expansions are computed by exact linear algebra in the monomial basis, one
// bigraded piece (row content, column content) at a time.

#include "detmld/poly.hpp"

#include <optional>
#include <vector>

namespace detmld::tableaux {

/// Row lengths, nonincreasing and positive.
class YoungDiagram {
public:
    explicit YoungDiagram(std::vector<int> rows);
    const std::vector<int>& rows() const { return rows_; }
    int size() const;  // number of boxes
    /// Row length, 0 past the last row.
    int row(std::size_t i) const { return i < rows_.size() ? rows_[i] : 0; }
    friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

private:
    std::vector<int> rows_;
};

class Tableau {
public:
    Tableau() = default;
    /// Rejects rows whose lengths do not form a Young diagram.
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    YoungDiagram shape() const;
    /// Number of occurrences of each value 1..m.
    std::vector<int> content(int m) const;
    int max_entry() const;

    friend auto operator<=>(const Tableau&, const Tableau&) = default;

private:
    std::vector<std::vector<int>> rows_;
};

struct DoubleTableau {
    Tableau left;
    Tableau right;

    /// Rejects sides with different shapes.
    DoubleTableau(Tableau l, Tableau r);
    YoungDiagram shape() const { return left.shape(); }
    friend auto operator<=>(const DoubleTableau&, const DoubleTableau&) = default;
};

struct StandardTerm {
    Rational coefficient;
    DoubleTableau tableau;
};

struct StandardExpansion {
    std::vector<StandardTerm> terms;  // sorted by tableau
};

/// Limits on basis enumeration.
struct Guard {
    int max_degree = 6;
    std::size_t max_basis = 50000;
};

/// Prefix sums of sigma never exceed those of tau.
bool dominance_leq(const YoungDiagram& sigma, const YoungDiagram& tau);

/// For all p, q: the first p rows of a hold no more entries <= q than the
/// first p rows of b.
bool tableau_leq(const Tableau& a, const Tableau& b);

/// Componentwise: left <= left and right <= right.
bool double_tableau_leq(const DoubleTableau& a, const DoubleTableau& b);

bool is_standard(const Tableau& t);
bool is_standard(const DoubleTableau& dt);

/// Product over rows of the corresponding minors. Rejects repeated entries in
/// a row, entries outside [1, m], or rows longer than m.
MultiPoly bideterminant(const DoubleTableau& dt, int m);

/// Standard double tableaux of one bicontent (left content = row content,
/// right content = column content), rows of length <= k_bound when given.
std::vector<DoubleTableau> enumerate_standard_basis(int m, std::optional<int> k_bound, const Bicontent& content,
                                                    const Guard& guard = {});

/// Standard double tableaux of every content in the given total degree.
std::vector<DoubleTableau> enumerate_standard_basis(int m, std::optional<int> k_bound, int degree,
                                                    const Guard& guard = {});

/// Expansion of an arbitrary polynomial in the standard basis; with k_bound,
/// the expansion of its image in R_{k_bound}.
StandardExpansion expand(const MultiPoly& p, std::optional<int> k_bound, const Guard& guard = {});

/// Straightening law: expansion of x_(S|T) in the standard basis.
StandardExpansion straighten(const DoubleTableau& dt, int m, std::optional<int> k_bound, const Guard& guard = {});

/// sum of coefficient * bideterminant.
MultiPoly reexpand(const StandardExpansion& e, int m);

/// Canonical representative of the image of p in R_k: the re-expansion of
/// its rows-<=k standard expansion. Two polynomials agree modulo I_{k+1}
/// exactly when their canonical representatives are equal.
MultiPoly reduce_mod_minors(const MultiPoly& p, int k, const Guard& guard = {});

/// Some F with d * F == g modulo I_{k+1}, returned as a canonical
/// representative; nullopt when d does not divide g in R_k. d must be
/// bihomogeneous.
std::optional<MultiPoly> divide_mod_minors(const MultiPoly& g, const MultiPoly& d, int k, const Guard& guard = {});

struct Membership {
    bool member = false;
    /// Rows-<=k standard expansion of F in R_k.
    StandardExpansion expansion;
};

/// Whether the image of F in R_k lies in the subalgebra S_k generated by the
/// k x k minors: true iff every standard term has rectangular shape (k,...,k).
/// Rejects F that is not homogeneous or whose degree is not divisible by k.
Membership subalgebra_membership(const MultiPoly& f, int m, int k, const Guard& guard = {});

/// Counts for the basis theorem in one degree: standard tableaux, monomials,
/// and the rank of the standard bideterminants in the monomial basis.
struct BasisCheck {
    std::size_t standard = 0;
    std::size_t monomials = 0;
    std::size_t rank = 0;
};

BasisCheck check_standard_basis(int m, int degree, const Guard& guard = {});

}  // namespace detmld::tableaux
