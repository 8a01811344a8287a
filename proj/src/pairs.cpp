#include "detmld/pairs.hpp"

namespace detmld {

std::uint64_t ExtNat::value() const {
    if (inf_) throw Rejected("expected a finite order, got inf");
    return value_;
}

ExtendedPartition::ExtendedPartition(std::vector<ExtNat> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] > entries_[i - 1])
            throw Rejected("extended partition must be nonincreasing (entry " + std::to_string(i + 1) +
                           " exceeds entry " + std::to_string(i) + ")");
    }
}

std::ostream& operator<<(std::ostream& os, const ExtendedPartition& p) {
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.entries()[i];
    return os << ')';
}

DeterminantalPair::DeterminantalPair(int m, int k, std::vector<Rational> alphas)
    : m_(m), k_(k), alphas_(std::move(alphas)) {
    if (m < 1) throw Rejected("m must be positive");
    if (k < 1) throw Rejected("k must be at least 1");
    if (k > m) throw Rejected("k must not exceed m");
    if (alphas_.size() > static_cast<std::size_t>(k))
        throw Rejected("at most k coefficients alpha_i may be given");
    alphas_.resize(static_cast<std::size_t>(k), Rational(0));
    for (auto& a : alphas_) a.canonicalize();
}

Rational DeterminantalPair::alpha_prefix(int j) const {
    Rational s = 0;
    for (int i = 1; i <= j; ++i) s += alpha(i);
    return s;
}

const Rational& MldValue::value() const {
    if (neg_inf_) throw Rejected("mld value is -inf");
    return value_;
}

std::string MldValue::to_string() const { return neg_inf_ ? "-inf" : detmld::to_string(value_); }

}  // namespace detmld
