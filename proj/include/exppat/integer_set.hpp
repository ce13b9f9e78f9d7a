#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "exppat/exp_value.hpp"
#include "exppat/nat.hpp"

namespace exppat {

struct Window {
  uint64_t lo = 1;
  uint64_t hi = 1;
};

// A set of naturals: either an explicit window-backed bitset or a membership
// rule (congruence class, finite set, interval, boolean combinators, quotient
// by a power of two). Rules are pure and evaluable at arbitrary-precision
// inputs, including symbolic power-of-two values; explicit sets answer only
// inside their window and raise WindowExceeded outside it.
//
// Immutable after construction; shared freely across threads.
class IntegerSet {
 public:
  IntegerSet();  // empty set

  static IntegerSet naturals();                         // mod 0 1
  static IntegerSet empty();                            // set {}
  static IntegerSet congruence(const Nat& a, const Nat& m);  // {n | n = a (mod m)}
  static IntegerSet multiples_of(const Nat& m) { return congruence(0, m); }
  static IntegerSet finite(std::vector<Nat> members);
  static IntegerSet interval(const Nat& lo, const Nat& hi);
  static IntegerSet union_of(std::vector<IntegerSet> parts);
  static IntegerSet inter_of(std::vector<IntegerSet> parts);
  static IntegerSet complement_of(IntegerSet inner);
  // {m | 2^shift * m  in  inner}
  static IntegerSet quotient_pow2(IntegerSet inner, uint64_t shift);
  static IntegerSet explicit_window(Window w, const std::vector<bool>& bits);
  // Membership decided by an arbitrary pure function; not parseable, renders
  // as the given label. Queried above 2^64 it raises WindowExceeded.
  static IntegerSet predicate(std::string label, std::function<bool(const Nat&)> pred);

  bool contains(const Nat& n) const;
  bool contains(uint64_t n) const { return contains(Nat(static_cast<unsigned long>(n))); }
  bool contains(const ExpValue& v) const;

  // True when membership can be decided everywhere in [lo, hi] without
  // leaving some explicit constituent's window.
  bool evaluable_on(uint64_t lo, uint64_t hi) const;

  uint64_t count_in(uint64_t lo, uint64_t hi) const;

  bool is_explicit() const;
  Window explicit_window_bounds() const;

  std::string str() const;
  static IntegerSet parse(const std::string& text);

 private:
  struct Node;
  explicit IntegerSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace exppat
