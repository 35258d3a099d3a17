#ifndef GALG_RATIONAL_HPP
#define GALG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace galg {

/// Exact rational number, always kept in canonical form.
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (surrounding whitespace allowed).
/// Throws InvalidInput on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace galg

#endif  // GALG_RATIONAL_HPP
