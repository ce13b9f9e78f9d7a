#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "exppat/error.hpp"

namespace exppat {

// Naturals are {1, 2, 3, ...} throughout. Nat is used wherever values can
// outgrow machine words; window positions and color counts stay uint64_t/int.
using Nat = mpz_class;
using Rat = mpq_class;

inline Nat nat_pow2(unsigned long e) {
  Nat r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

// Largest k with 2^k <= n (n >= 1).
inline uint64_t floor_log2_u64(uint64_t n) {
  uint64_t k = 0;
  while (n >>= 1) ++k;
  return k;
}

inline Nat parse_nat(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty number");
  for (char ch : text)
    if (ch < '0' || ch > '9') fail(Errc::ParseError, "bad digit in number '" + text + "'");
  return Nat(text, 10);
}

inline uint64_t nat_to_u64(const Nat& n) {
  if (!n.fits_ulong_p()) fail(Errc::BadArgument, "value too large for a window position");
  return n.get_ui();
}

}  // namespace exppat
