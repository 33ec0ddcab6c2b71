#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lipnorm {

// Exact scalar used everywhere. mpq_class keeps values canonical as long as
// they are produced by arithmetic; parse_rational canonicalizes literals.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "7", "-3/4", "1.5", "-0.25", "2.5e-3" exactly.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

Rational dot(const Vector& a, const Vector& b);

}  // namespace lipnorm
