#pragma once

// Exact rational numbers. GMP keeps every mpq_class canonical (lowest terms,
// positive denominator), which is the invariant the rest of the library
// relies on.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kahlerdeg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q{Integer{static_cast<long>(num)}, Integer{static_cast<long>(den)}};
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_one(const Rational& q) { return q == 1; }

/// "3", "-1/2"
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kahlerdeg
