#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logsurf {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p" (optional leading '-'), reducing to lowest terms.
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical reduced form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// GMP has no long long constructors; long is 64-bit on the supported targets.
inline Rational from_int(long long value) { return Rational(static_cast<long>(value)); }

inline Rational make_rational(long long num, long long den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

} // namespace logsurf
