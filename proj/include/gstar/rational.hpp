#ifndef GSTAR_RATIONAL_HPP
#define GSTAR_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gstar {

// All arithmetic in this project is exact. Rationals are kept canonical
// (gcd 1, positive denominator); GMP maintains this through arithmetic as
// long as raw assignments are canonicalized, which parse_rational does.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p" or "p/q" with optional leading sign on p. Returns nullopt for
// anything else, including a zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string rational_str(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Order-independent hash for column/row deduplication. Collisions are fine
// (callers verify with exact compares); wrong equal-value hashes are not.
std::size_t hash_rational(const Rational& q, std::size_t seed);

} // namespace gstar

#endif
