#pragma once

// Core value types: extended naturals, extended partitions, determinantal
// pairs (D^k, sum alpha_i D^{k-i}) and minimal log discrepancy values.

#include "detmld/rational.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace detmld {

/// An element of N u {inf}. Addition absorbs infinity.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit from naturals is intended

    static constexpr ExtNat inf() {
        ExtNat n;
        n.inf_ = true;
        return n;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }

    /// Throws Rejected on INF.
    std::uint64_t value() const;

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return inf();
        return ExtNat(a.value_ + b.value_);
    }
    ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return inf_ ? "inf" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool inf_ = false;
};

inline constexpr ExtNat INF = ExtNat::inf();

inline std::ostream& operator<<(std::ostream& os, ExtNat n) { return os << n.to_string(); }

/// Nonincreasing m-tuple over N u {inf}; labels the jet-space orbit of
/// diag(t^lambda_1, ..., t^lambda_m). Entries are 1-based in the accessors.
class ExtendedPartition {
public:
    /// Throws Rejected unless entries are nonincreasing.
    explicit ExtendedPartition(std::vector<ExtNat> entries);
    ExtendedPartition(std::initializer_list<ExtNat> entries)
        : ExtendedPartition(std::vector<ExtNat>(entries)) {}

    std::size_t size() const { return entries_.size(); }
    /// lambda_i for 1 <= i <= m.
    ExtNat operator[](std::size_t i) const { return entries_.at(i - 1); }
    const std::vector<ExtNat>& entries() const { return entries_; }

    friend bool operator==(const ExtendedPartition&, const ExtendedPartition&) = default;

private:
    std::vector<ExtNat> entries_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedPartition& p);

/// The pair (D^k, sum_{i=1}^k alpha_i D^{k-i}) inside m x m matrices.
class DeterminantalPair {
public:
    /// Validates 1 <= k <= m and |alphas| <= k; pads alphas with zeros to length k.
    DeterminantalPair(int m, int k, std::vector<Rational> alphas = {});

    int m() const { return m_; }
    int k() const { return k_; }
    const std::vector<Rational>& alphas() const { return alphas_; }
    /// alpha_i, 1-based.
    const Rational& alpha(int i) const { return alphas_.at(static_cast<std::size_t>(i - 1)); }
    /// alpha_1 + ... + alpha_j.
    Rational alpha_prefix(int j) const;

    friend bool operator==(const DeterminantalPair&, const DeterminantalPair&) = default;

private:
    int m_;
    int k_;
    std::vector<Rational> alphas_;
};

/// Either a finite rational or -infinity.
class MldValue {
public:
    static MldValue finite(Rational v) { return MldValue(canonical(std::move(v)), false); }
    static MldValue neg_infinity() { return MldValue(Rational(0), true); }

    bool is_neg_infinity() const { return neg_inf_; }
    bool is_finite() const { return !neg_inf_; }
    /// Throws Rejected on -infinity.
    const Rational& value() const;

    friend bool operator==(const MldValue& a, const MldValue& b) {
        return a.neg_inf_ == b.neg_inf_ && (a.neg_inf_ || a.value_ == b.value_);
    }
    friend bool operator<(const MldValue& a, const MldValue& b) {
        if (a.neg_inf_) return !b.neg_inf_;
        if (b.neg_inf_) return false;
        return a.value_ < b.value_;
    }
    friend bool operator>(const MldValue& a, const MldValue& b) { return b < a; }
    friend bool operator<=(const MldValue& a, const MldValue& b) { return !(b < a); }
    friend bool operator>=(const MldValue& a, const MldValue& b) { return !(a < b); }

    /// "-inf" or the rational in "p/q" form.
    std::string to_string() const;

private:
    MldValue(Rational v, bool neg_inf) : value_(std::move(v)), neg_inf_(neg_inf) {}
    Rational value_;
    bool neg_inf_;
};

inline std::ostream& operator<<(std::ostream& os, const MldValue& v) { return os << v.to_string(); }

}  // namespace detmld
