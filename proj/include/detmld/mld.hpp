#pragma once

// Closed-form minimal log discrepancies of the pairs (D^k, sum alpha_i D^{k-i})
// at closed points x_q (rank-q matrices) and along the strata D^{k-j}.

#include "detmld/pairs.hpp"

#include <optional>
#include <vector>

namespace detmld::mld {

/// beta_j = (m-k) + (2j-1) - (alpha_1 + ... + alpha_j): the coefficient of
/// lambda_{m-k+j} in the jet-space objective.
std::vector<Rational> beta_coefficients(const DeterminantalPair& pair, int count);

/// A failed prefix inequality alpha_1 + ... + alpha_j <= m-k+2j-1.
struct LcViolation {
    int j;
    Rational prefix_sum;
    Rational bound;
};

/// First violated inequality among j = 1..count, if any.
std::optional<LcViolation> first_lc_violation(const DeterminantalPair& pair, int count);

/// Log canonical at x_q: the inequalities hold for j = 1..k-q (vacuous for q = k).
bool is_lc_at_rank(const DeterminantalPair& pair, int q);

/// mld(x_q; D^k, sum alpha_i D^{k-i}) = q(m-k) + km - sum_{i=1}^{k-q} (k-q-i+1) alpha_i,
/// or -inf when the pair is not log canonical at x_q.
MldValue mld_at_rank(const DeterminantalPair& pair, int q);

/// Log canonical along D^{k-j}: the inequalities hold for every prefix 1..k.
bool is_lc_along(const DeterminantalPair& pair, int j);

/// mld(D^{k-j}; ...) = j(m-k+j) - sum_{i=1}^j (j-i+1) alpha_i, or -inf.
MldValue mld_along(const DeterminantalPair& pair, int j);

/// D^k has terminal singularities: k = m, or mld along the singular locus exceeds 1.
bool is_terminal(int m, int k);

struct ProfileStep {
    int q;                  // step from q-1 to q
    MldValue difference;    // mld(q) - mld(q-1), -inf if either side is -inf
    Rational expected;      // (m-k) + alpha_1 + ... + alpha_{k-q+1}
    bool holds;             // both finite, difference == expected and > 0
};

struct SemicontinuityProfile {
    std::vector<MldValue> values;   // indexed by q = 0..k
    std::vector<ProfileStep> steps; // q = 1..k
    bool strictly_increasing;       // over consecutive finite pairs
};

/// mld at every rank q = 0..k. Rejects negative alpha_i.
SemicontinuityProfile semicontinuity_profile(const DeterminantalPair& pair);

}  // namespace detmld::mld
