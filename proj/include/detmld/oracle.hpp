#pragma once

// Independent checks of the closed forms:
//
//  * brute-force minimisation of the jet-space objective
//      codim(C_lambda [cap fiber over x_q]) - ord_lambda(J(D^k)) - sum alpha_i ord_lambda(D^{k-i})
//    over the finite tails of valid extended partitions, and
//  * contact orders of determinantal ideals computed directly from minors
//    of diag(t^lambda_1, ..., t^lambda_m), optionally conjugated by random
//    constant matrices.

#include "detmld/pairs.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace detmld::oracle {

/// Where the mld is taken: the closed point x_q, or the stratum D^{k-j}.
struct Target {
    enum class Kind { point, locus };
    Kind kind;
    int index;  // q for a point, j for a locus

    static Target point(int q) { return {Kind::point, q}; }
    static Target locus(int j) { return {Kind::locus, j}; }
};

struct OracleResult {
    /// -inf whenever prefix_unbounded; otherwise the minimum over the searched box.
    MldValue minimum = MldValue::neg_infinity();
    /// Smallest objective value found in the box, regardless of the certificate.
    Rational box_minimum;
    /// (lambda_{m-k+1}, ..., lambda_m) attaining box_minimum.
    std::vector<std::uint64_t> argmin;
    /// Some coordinate of argmin equals the bound L.
    bool at_boundary = false;
    /// Some prefix sum beta_1 + ... + beta_t is negative over the target's
    /// free coordinates, so the infimum over all valid orbits is -inf.
    bool prefix_unbounded = false;
    /// Number of tails visited.
    std::uint64_t visited = 0;
};

/// The objective at one orbit. Rejects lambda that is not a valid member of
/// the target's contact locus or has INF where a finite entry is required.
Rational em_objective(const DeterminantalPair& pair, const ExtendedPartition& lambda, Target target);

/// Enumerates every nonincreasing tail with entries in [0, L] satisfying the
/// target's constraints, in lexicographically descending order; ties keep the
/// first tail visited.
OracleResult minimize_em_objective(const DeterminantalPair& pair, Target target, std::uint64_t L);

struct OracleComparison {
    OracleResult oracle;
    MldValue closed_form = MldValue::neg_infinity();
    bool agree = false;
};

OracleComparison mld_via_oracle(const DeterminantalPair& pair, Target target, std::uint64_t L);

/// Contact order of the ideal of s x s minors along the arc diag(t^lambda)
/// (or G diag(t^lambda) H when conjugated). INF entries are modelled by
/// t^{N+1}. Returns nullopt when every minor vanishes modulo t^{N+1}.
struct SeriesOrderOptions {
    std::optional<std::uint64_t> conjugation_seed;  // random invertible G, H when set
};

std::optional<std::uint64_t> ord_ideal_powerseries(const std::vector<ExtNat>& lambda, int m, int s, int N,
                                                   const SeriesOrderOptions& options = {});

}  // namespace detmld::oracle
