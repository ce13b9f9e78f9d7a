#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "exppat/coloring.hpp"
#include "exppat/integer_set.hpp"
#include "exppat/pattern.hpp"

namespace exppat {

struct SearchBudget {
  uint64_t max_nodes = 1'000'000;
  Nat max_value = 1'000'000;  // cap on pattern member values (witness searches)
  double time_hint = 60.0;    // advisory only, never enforced
};

enum class SearchOutcome { Found, Exhausted, BudgetExceeded };

inline const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "Found";
    case SearchOutcome::Exhausted: return "Exhausted";
    case SearchOutcome::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

// One pattern instance with all members inside a finite window.
struct Instance {
  uint64_t s0 = 0, s1 = 0;
  std::vector<uint64_t> values;

  uint64_t max_value() const { return values.back(); }
};

// Streams every instance with members <= n in lexicographic (s0, s1) order.
// Return false from the callback to stop early.
void for_each_instance(const PatternSpec& p, uint64_t n,
                       const std::function<bool(const Instance&)>& f);
std::vector<Instance> enumerate_instances(const PatternSpec& p, uint64_t n);

// Lexicographically least (in slot order) monochromatic instance, if any.
std::optional<Witness> find_monochromatic(const Coloring& c, const PatternSpec& p);

struct SearchOptions {
  bool symmetry_breaking = true;
  int jobs = 1;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::optional<Coloring> coloring;  // present iff Found
  uint64_t nodes = 0;
};

// Backtracking search for an r-coloring of [1, n] with no monochromatic
// instance. Assigns 1..n in order with incremental checks on the instances
// whose largest member is the value just colored. Symmetry breaking: value 1
// takes color 0, and color i+1 appears only after color i. The budget's
// max_nodes bounds assignment attempts (per worker when jobs > 1); max_value
// is not consulted (n is the cap).
SearchResult search_avoiding(uint64_t n, int r, const PatternSpec& p, const SearchBudget& budget,
                             const SearchOptions& opts = {});

struct PatternNumberResult {
  std::optional<uint64_t> value;  // least N with no avoiding coloring; empty = Unknown
  SearchOutcome last_outcome = SearchOutcome::Exhausted;
  uint64_t last_n = 0;  // last N searched
  uint64_t nodes = 0;
};

// Least N <= n_max such that search_avoiding(N, r, p) is Exhausted, scanning
// upward (an avoider at N restricts to one at N-1, so the first Exhausted is
// the least). Unknown when the scan hits n_max or the budget.
PatternNumberResult pattern_number(int r, const PatternSpec& p, uint64_t n_max,
                                   const SearchBudget& budget, const SearchOptions& opts = {});

// Least (b, c) with b, c, b+ell*c in A, members capped by budget.max_value.
// Throws NoWitnessInBudget when the region is exhausted or max_nodes is hit.
std::pair<uint64_t, uint64_t> star_witness(const IntegerSet& a, uint64_t ell,
                                           const SearchBudget& budget);

// Least (b, c) with b, c in A and b+ell*c in A for every ell = 1..big_l.
std::pair<uint64_t, uint64_t> dagger_witness(const IntegerSet& a, uint64_t big_l,
                                             const SearchBudget& budget);

// A pair (b, c) such that for every (A_j, ell_j) the triple b, c, b+ell_j*c
// lies entirely inside or entirely outside A_j. Found by searching a Brauer
// pattern {b, c, b+c, ..., b+ell*c}, ell = max ell_j, monochromatic under the
// atom coloring induced by the sets; scanned by increasing b+c, then b, so
// the returned pair is canonical.
std::pair<uint64_t, uint64_t> gamma_witness(const std::vector<std::pair<IntegerSet, uint64_t>>& sets,
                                            const SearchBudget& budget);

}  // namespace exppat
