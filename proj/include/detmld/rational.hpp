#pragma once

// Exact rational numbers backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace detmld {

/// Raised whenever an input violates a documented precondition.
class Rejected : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal consistency check fails (a bug, not bad input).
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// GMP assumes canonical operands. mpq_class(num, den) does not reduce, so
// every value entering the library goes through canonical().
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q". Rejects a zero denominator or malformed text.
Rational parse_rational(std::string_view text);

inline Rational canonical(Rational r) {
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace detmld
