#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exppat/integer_set.hpp"
#include "exppat/nat.hpp"
#include "exppat/search.hpp"

namespace exppat {

// A deterministic stand-in for "S is in the ultrafilter": S is large iff
// |S ∩ [1, W]| >= tau. Monotone (S ⊆ T, S large => T large) and proper
// (the empty set is never large). It is NOT closed under intersection, so
// every procedure that intersects large sets re-tests the result.
struct LargenessOracle {
  uint64_t window_w = 1000;
  uint64_t threshold = 1;

  void validate() const;
  uint64_t count(const IntegerSet& s) const;  // |S ∩ [1, W]|
  bool is_large(const IntegerSet& s) const;
  std::string str() const;  // "LARGE(W=..., tau=...)"
};

// A/2^n = {m | 2^n * m in A}.
IntegerSet quotient_set(const IntegerSet& a, uint64_t n);

// {n in [1, n_max] | A/2^n is large}.
std::vector<uint64_t> a_hat(const IntegerSet& a, const LargenessOracle& oracle, uint64_t n_max);

// The same set without a cutoff, as a lazy memoized predicate; this is the
// form the extraction procedures intersect with (a finite truncation would
// starve the window counts). Evaluable for n up to 10^5.
IntegerSet a_hat_set(const IntegerSet& a, const LargenessOracle& oracle);

struct ReportCheck {
  std::string value;  // rendered value, or a set when testing largeness
  std::string set;
  bool pass = false;
};

struct ReportStep {
  std::string description;
  std::string chosen;
  std::vector<ReportCheck> checks;
};

// Audit trail of a proof execution: what was chosen at each step and every
// membership/largeness claim with its re-checked verdict.
struct ExtractionReport {
  std::vector<ReportStep> steps;
  std::string failure_name;  // empty unless a named step failed
  std::string failure_detail;

  bool success() const;
  uint64_t checks_passed() const;
  uint64_t checks_total() const;
  std::string to_text() const;
};

struct TripleExtraction {
  std::optional<Nat> x, y;  // with 2^x * y, a monochromatic exponential pair
  ExtractionReport report;
};

// Runs the two-level extraction: a := least of Â; (b, c) from a star witness
// with coefficient 2^a inside A/2^a ∩ Â; d := least of A/2^b ∩ A/2^(b+2^a c);
// x := 2^a c, y := 2^b d. Verifies x, y, 2^x y in A exactly. Failures are
// reported (EmptyAHat, StarWitnessFailed, IntersectionEmpty), not thrown.
TripleExtraction extract_exp2_triple(const IntegerSet& a, const LargenessOracle& oracle,
                                     const SearchBudget& budget, uint64_t n_max = 64);

struct SequenceExtraction {
  std::vector<uint64_t> seq;  // a_1..a_{2n+1} on success, else empty
  ExtractionReport report;
};

// Runs the inductive construction: a_1 := least of Â; at stage n the set
// A_n := Â ∩ ⋂_{i<=2n-1} A/2^{a_i} ∩ ⋂_{i<2j<2n-1} A/2^{a_{2j+1}+2^{a_i} a_{2j}}
// is re-tested for largeness and a ladder witness with L = max 2^{a_i} gives
// (a_{2n+1}, a_{2n}). On completion all four condition families are verified.
SequenceExtraction extract_exp_sequence(const IntegerSet& a, const LargenessOracle& oracle,
                                        uint64_t n, const SearchBudget& budget,
                                        uint64_t n_max = 64);

enum class VerifyMode { Exp2, Tower };

// Checks the infinite-pattern consequences on a concrete prefix. Exp2 mode:
// b_n := 2^{a_{2n-1}} a_{2n} and 2^{b_n} b_{n+1} lie in A. Tower mode reads A
// at the exponent level (the induced coloring D_i = {n : 2^n in C_i}): the
// tower values 2^{b_n} and their exponential compositions are carried
// symbolically and their exponents checked in A.
ExtractionReport verify_infinite_pattern(const std::vector<uint64_t>& a_seq, const IntegerSet& a,
                                         VerifyMode mode);

}  // namespace exppat
