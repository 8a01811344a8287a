#pragma once

// Arithmetic on extended partitions: which (GL_m x GL_m)-orbits C_lambda of
// arcs lie in D^k, their contact orders with D^{k-i} and with the Nash
// ideal, and their codimensions in the arc space of D^k.
//
// Throughout, lambda has length m, entries are indexed 1..m, and the
// "finite tail" of an orbit in D^k is (lambda_{m-k+1}, ..., lambda_m).

#include "detmld/pairs.hpp"

#include <cstdint>

namespace detmld::orbit {

/// lambda_1 = ... = lambda_{m-k} = inf.
bool in_jet_space(const ExtendedPartition& lambda, const DeterminantalPair& pair);

/// lambda_{m-k+1} < inf. Requires in_jet_space.
bool has_finite_codim(const ExtendedPartition& lambda, const DeterminantalPair& pair);

/// lambda_1..lambda_{m-q} > 0 and lambda_{m-q+1..m} = 0, for 0 <= q <= k.
bool meets_point_fiber(const ExtendedPartition& lambda, const DeterminantalPair& pair, int q);

/// ord along C_lambda of the ideal of D^{k-i}, i.e. of the (k-i+1)-minors:
/// lambda_{m-k+i} + ... + lambda_m. Defined for 1 <= i <= k.
ExtNat contact_order_subvariety(const ExtendedPartition& lambda, const DeterminantalPair& pair, int i);

/// ord of the Nash ideal J(D^k) along C_lambda: (m-k) * (lambda_{m-k+1} + ... + lambda_m).
/// Zero when k = m.
ExtNat nash_contact_order(const ExtendedPartition& lambda, const DeterminantalPair& pair);

/// codim of C_lambda in the arc space of D^k: sum_{i=m-k+1}^m (2i-1) lambda_i.
std::uint64_t codim(const ExtendedPartition& lambda, const DeterminantalPair& pair);

/// codim of C_lambda intersected with the arcs through the rank-q point x_q:
/// q(2m-q) + codim(lambda).
std::uint64_t codim_point(const ExtendedPartition& lambda, const DeterminantalPair& pair, int q);

}  // namespace detmld::orbit
