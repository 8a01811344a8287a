#pragma once

// Exterior algebra over R = Q[x_ij] and the canonical form of D^k.
//
// On the chart D(Delta_IJ), where a k x k minor is invertible, the variables
// S_IJ = {x_ij : i in I or j in J} are coordinates and the canonical
// generator is w = +-Delta_IJ^{-(m-k)} wedge_{S_IJ} dx. A top form built
// from any k(2m-k) of the dx_ij restricts to F * w; this module computes F
// by eliminating, one at a time, the differentials outside S_IJ with the
// relation d(Delta^+) = 0 coming from (k+1) x (k+1) minors.
//
// All identities are checked in R after clearing denominators, modulo
// I_{k+1} via tableaux::reduce_mod_minors.

#include "detmld/poly.hpp"
#include "detmld/tableaux.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace detmld::forms {

/// Variable index of x_ij (1-based): (i-1)*m + (j-1).
inline int var_index(int m, int i, int j) { return (i - 1) * m + (j - 1); }
inline std::pair<int, int> var_position(int m, int v) { return {v / m + 1, v % m + 1}; }

/// Finite sum of polynomial multiples of dx_{v1} ^ ... ^ dx_{vd}, each
/// index set sorted increasingly (lexicographic order on (i, j)).
class ExteriorForm {
public:
    using Terms = std::map<std::vector<int>, MultiPoly>;

    ExteriorForm(int m, int degree);
    /// coefficient * dx_{v1} ^ ... ^ dx_{vd} for indices in the given order;
    /// sorts them with the matching sign, zero on a repeated index.
    static ExteriorForm basis(int m, std::vector<int> indices, const MultiPoly& coefficient);

    int m() const { return m_; }
    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    MultiPoly coefficient(const std::vector<int>& sorted_indices) const;

    void add_term(const std::vector<int>& sorted_indices, const MultiPoly& c);
    ExteriorForm& operator+=(const ExteriorForm& o);
    friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
    friend ExteriorForm operator*(const MultiPoly& c, const ExteriorForm& f);
    friend ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

    friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

private:
    int m_;
    int degree_;
    Terms terms_;
};

/// d of an s x s minor: sum over (i, j) in rows x cols of
/// sgn(i, j) * Delta_{rows - i, cols - j} dx_ij, the sign alternating along
/// antidiagonals of the submatrix.
ExteriorForm d_minor(const MinorIndex& idx, int m);

/// Chart data for D(Delta_IJ).
struct ChartForm {
    MinorIndex chart;
    std::vector<int> numerator_indices;  // S_IJ, sorted variable indices
    int exponent;                        // m - k
    int sign;                            // w = sign * Delta_IJ^{-exponent} * wedge(S_IJ)
};

/// The reference chart I = J = {1..k} has sign +1; other signs follow from
/// single row or column swaps (rows first, then columns) through
/// verify_chart_transition.
ChartForm chart_form(const std::vector<int>& rows, const std::vector<int>& cols, int m, int k);

enum class EliminationOrder { lexicographic, reverse_lexicographic };

struct ReductionResult {
    MultiPoly f;                      // partial = f * w, canonical representative in R_k
    tableaux::Membership certificate; // subalgebra membership of f for k
    int eliminated = 0;               // number of bad differentials
    MultiPoly cleared;                // G with partial = G / Delta^eliminated * wedge(S_IJ)
};

/// indices: k(2m-k) distinct variable indices. Rejects other cardinalities.
ReductionResult reduce_top_form(const std::vector<int>& indices, const ChartForm& chart, int m, int k,
                                EliminationOrder order = EliminationOrder::lexicographic);

struct TransitionReport {
    bool ok = false;
    int sign = 0;  // Delta'^{-(m-k)} wedge(S') = sign * Delta^{-(m-k)} wedge(S)
    /// One entry per transported row/column: the two-term relation check.
    std::vector<bool> column_relations;
    bool cleared_identity = false;
};

/// Verifies the change of chart between (I, J) and (I', J'), which must
/// differ by one row or one column (or be identical).
TransitionReport verify_chart_transition(const std::vector<int>& rows, const std::vector<int>& cols,
                                         const std::vector<int>& rows2, const std::vector<int>& cols2, int m, int k);

struct NashEntry {
    std::vector<int> indices;  // the top form's variables
    MultiPoly f{1};
    bool member = false;           // f in S_k with the expected degree
    bool order_independent = false;
    bool chart_consistent = false; // every chart yields the same f
    std::int64_t micros = 0;
};

struct NashReport {
    int m = 0;
    int k = 0;
    std::vector<NashEntry> entries;   // lexicographic subset order
    bool all_members = false;
    bool order_independent = false;
    bool charts_consistent = false;
    bool powers_realized = false;     // each Delta_IJ^{m-k} arises as the f of wedge(S_IJ)
    bool transitions_ok = false;
    std::size_t charts = 0;
    std::size_t transitions_checked = 0;
    bool passed() const {
        return all_members && order_independent && charts_consistent && powers_realized && transitions_ok;
    }
};

struct NashOptions {
    unsigned threads = 1;
    bool check_all_charts = true;
};

/// Exhaustive verification over every k(2m-k)-subset of the m^2 variables.
/// Rejects m > 3.
NashReport verify_nash(int m, int k, const NashOptions& options = {});

}  // namespace detmld::forms
