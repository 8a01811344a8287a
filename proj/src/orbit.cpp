#include "detmld/orbit.hpp"

#include <string>

namespace detmld::orbit {

namespace {

void check_length(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    if (lambda.size() != static_cast<std::size_t>(pair.m()))
        throw Rejected("partition length " + std::to_string(lambda.size()) + " does not match m = " +
                       std::to_string(pair.m()));
}

void require_in_jet_space(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    if (!in_jet_space(lambda, pair)) throw Rejected("orbit is not contained in the jet space of D^k");
}

void require_finite_codim(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    require_in_jet_space(lambda, pair);
    if (!has_finite_codim(lambda, pair)) throw Rejected("orbit has infinite codimension");
}

void check_rank(const DeterminantalPair& pair, int q) {
    if (q < 0 || q > pair.k()) throw Rejected("rank q must satisfy 0 <= q <= k");
}

}  // namespace

bool in_jet_space(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    check_length(lambda, pair);
    for (int i = 1; i <= pair.m() - pair.k(); ++i)
        if (!lambda[i].is_inf()) return false;
    return true;
}

bool has_finite_codim(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    require_in_jet_space(lambda, pair);
    return lambda[pair.m() - pair.k() + 1].is_finite();
}

bool meets_point_fiber(const ExtendedPartition& lambda, const DeterminantalPair& pair, int q) {
    check_rank(pair, q);
    require_in_jet_space(lambda, pair);
    const int m = pair.m();
    for (int i = 1; i <= m - q; ++i)
        if (lambda[i] == ExtNat(0)) return false;
    for (int i = m - q + 1; i <= m; ++i)
        if (lambda[i] != ExtNat(0)) return false;
    return true;
}

ExtNat contact_order_subvariety(const ExtendedPartition& lambda, const DeterminantalPair& pair, int i) {
    if (i < 1 || i > pair.k()) throw Rejected("subvariety index i must satisfy 1 <= i <= k");
    require_in_jet_space(lambda, pair);
    ExtNat sum = 0;
    for (int l = pair.m() - pair.k() + i; l <= pair.m(); ++l) sum += lambda[l];
    return sum;
}

ExtNat nash_contact_order(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    require_in_jet_space(lambda, pair);
    const int corank = pair.m() - pair.k();
    if (corank == 0) return 0;
    ExtNat tail = contact_order_subvariety(lambda, pair, 1);
    if (tail.is_inf()) return INF;
    return tail.value() * static_cast<std::uint64_t>(corank);
}

std::uint64_t codim(const ExtendedPartition& lambda, const DeterminantalPair& pair) {
    require_finite_codim(lambda, pair);
    std::uint64_t c = 0;
    for (int i = pair.m() - pair.k() + 1; i <= pair.m(); ++i)
        c += static_cast<std::uint64_t>(2 * i - 1) * lambda[i].value();
    return c;
}

std::uint64_t codim_point(const ExtendedPartition& lambda, const DeterminantalPair& pair, int q) {
    require_finite_codim(lambda, pair);
    if (!meets_point_fiber(lambda, pair, q)) throw Rejected("orbit does not meet the fiber over x_q");
    const auto m = static_cast<std::uint64_t>(pair.m());
    const auto uq = static_cast<std::uint64_t>(q);
    return uq * (2 * m - uq) + codim(lambda, pair);
}

}  // namespace detmld::orbit
