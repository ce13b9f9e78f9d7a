#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "exppat/exp_value.hpp"
#include "exppat/integer_set.hpp"
#include "exppat/nat.hpp"

namespace exppat {

constexpr int kUnassigned = -1;

// A finite window [lo, hi] of naturals partitioned into r color classes.
// Immutable in practice: operations take it by const reference and never
// mutate a shared instance.
struct Coloring {
  uint64_t lo = 1;
  uint64_t hi = 1;
  int r = 1;
  std::vector<int> assign;  // assign[n - lo]; kUnassigned marks a hole

  int color_of(uint64_t n) const { return assign[n - lo]; }
  uint64_t size() const { return hi - lo + 1; }

  IntegerSet color_class(int color) const;
};

// Checks the partition invariants: total assignment, indices < r, lo >= 1.
void validate_coloring(const Coloring& c);

// The exponent-transfer coloring D over [1, floor(log2 N)]: D(n) = c(2^n).
Coloring induced_exp_coloring(const Coloring& c);

// (a, b, c) = (2^x, 2^y, 2^(y*2^x)); b^a = c holds in normal form.
std::tuple<ExpValue, ExpValue, ExpValue> lift_exp_witness(const Nat& x, const Nat& y);

// Text format, bit-exact: line 1 "N r" (window [1, N]); line 2: N color
// indices. parse_coloring reports 1-based line numbers on errors.
std::string format_coloring(const Coloring& c);
Coloring parse_coloring(const std::string& text);

}  // namespace exppat
