#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace comeasure {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize on its own, so every rational
// built from parts goes through here.
inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "3", "-3/4", "0". Throws on anything else.
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  if (q.get_den() == 0) throw std::invalid_argument("bad rational literal: " + s);
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Fits-in-int64 probe used when emitting JSON numbers.
inline bool fits_int64(const Int& z) {
  static const Int lo("-9223372036854775808"), hi("9223372036854775807");
  return z >= lo && z <= hi;
}

inline std::int64_t to_int64(const Int& z) {
  if (!fits_int64(z)) throw std::overflow_error("integer exceeds 64 bits");
  // mpz get_si is long; on this platform long is 64-bit.
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace comeasure
