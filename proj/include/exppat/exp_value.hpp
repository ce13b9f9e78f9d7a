#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exppat/nat.hpp"

namespace exppat {

// Exact positive value kept in the normal form 2^e * m with m odd. The
// exponent is itself arbitrary precision, so values like 2^(2^1536 * 24)
// stay representable without ever expanding to a numeral. Two values are
// equal iff their normal forms are equal.
class ExpValue {
 public:
  ExpValue() : exp_(0), odd_(1) {}

  static ExpValue num(const Nat& n);
  static ExpValue pow2(const Nat& e);
  static ExpValue prod(const std::vector<ExpValue>& factors);

  const Nat& exponent() const { return exp_; }
  const Nat& odd_part() const { return odd_; }

  bool operator==(const ExpValue& o) const { return exp_ == o.exp_ && odd_ == o.odd_; }
  bool operator!=(const ExpValue& o) const { return !(*this == o); }

  ExpValue times(const ExpValue& o) const;
  ExpValue shifted(const Nat& add_exp) const;  // value * 2^add_exp
  // (2^e m)^k; for m > 1 the expansion of m^k must stay below the bit guard.
  ExpValue pow_nat(const Nat& k) const;

  // e + bitlen(m): number of binary digits of the value.
  Nat bit_length() const;
  // Expands to a numeral when the value fits in max_bits.
  std::optional<Nat> to_nat(uint64_t max_bits = 1u << 20) const;
  // Three-way comparison against a numeral; never expands more than the
  // bound's width.
  int compare(const Nat& bound) const;

  // Decimal when small, `2^e` for pure powers, `2^e*m` otherwise.
  std::string str() const;

 private:
  ExpValue(Nat e, Nat m) : exp_(std::move(e)), odd_(std::move(m)) {}

  Nat exp_;
  Nat odd_;
};

}  // namespace exppat
