#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ncqm {

// Exact arbitrary-precision rational scalar. boost keeps the canonical form
// (gcd-reduced, positive denominator) after every operation, so equality is
// plain and every identity in this library is tested exactly.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parse "p" or "p/q" (optional sign on p, q a positive integer).
/// Throws DomainError{ParseError} on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace ncqm
