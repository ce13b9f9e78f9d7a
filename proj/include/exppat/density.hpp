#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "exppat/coloring.hpp"
#include "exppat/integer_set.hpp"
#include "exppat/nat.hpp"

namespace exppat {

// Exact finite-window counting data: cumulative counts |A n [1, n]| up to
// n_max and the min/max of the ratio count/n over the tail [n_min, n_max].
// No limits are computed anywhere; ratios are exact rationals.
struct DensityProfile {
  IntegerSet set;
  uint64_t n_min = 1;
  uint64_t n_max = 1;
  std::vector<uint64_t> counts;  // counts[n-1] = |A n [1, n]|
  Rat min_ratio;
  Rat max_ratio;

  uint64_t count_at(uint64_t n) const { return counts[n - 1]; }
};

DensityProfile density_profile(const IntegerSet& a, uint64_t n_min, uint64_t n_max);

// Leftmost interval [s, s+k-1] contained in A within the window, if any.
std::optional<std::pair<uint64_t, uint64_t>> find_thick_interval(const IntegerSet& a, uint64_t k,
                                                                 Window window);

// Delta(X) = {x' - x | x < x' in X} as a finite set.
IntegerSet difference_set(const std::vector<uint64_t>& x);
std::vector<uint64_t> difference_list(const std::vector<uint64_t>& x);

// Greedy interval chain: m_1 = least element of A, then right endpoints of
// successively longer intervals of A (each of length m_1+...+m_k+1, searched
// left to right from the previous endpoint). Guarantees Delta(X) subset of A,
// and rechecks that before returning.
std::vector<uint64_t> thick_to_delta(const IntegerSet& a, uint64_t m, Window window);

struct DeltaIntersection {
  uint64_t d;       // = a2 - a1 = x2 - x1
  uint64_t a1, a2;  // in A
  uint64_t x1, x2;  // in X
};

// Constructive pigeonhole: least shift n >= 0 with two elements of n + X in
// A; the difference lands in Delta(A) n Delta(X).
DeltaIntersection delta_intersection_witness(const IntegerSet& a, const std::vector<uint64_t>& x,
                                             Window window);

// Greedy Ramsey extraction for pair colorings of [1, n]: repeatedly take the
// least unprocessed vertex and keep its majority color class. For r = 2 the
// result has size >= max(2, floor(floor(log2 n) / 2)).
std::pair<std::vector<uint64_t>, int> ramsey_homogeneous_pairs(
    uint64_t n, int r, const std::function<int(uint64_t, uint64_t)>& pair_color);

// Partition regularity of difference sets: colors Delta(X) through the index
// pairs and extracts Y with Delta(Y) monochromatic.
std::pair<int, std::vector<uint64_t>> delta_partition_regular(
    const std::vector<uint64_t>& x, int r, const std::function<int(uint64_t)>& diff_color);

// From a Delta-witness X for A, produce b, c with {b, c, b+ell*c} in A via
// the shifted-set pigeonhole on ell*X.
std::pair<uint64_t, uint64_t> gen_schur_from_delta(const IntegerSet& a,
                                                   const std::vector<uint64_t>& x, uint64_t ell,
                                                   Window window);

// Least color index that is dense (window ratio >= floor) and carries a
// Delta-witness of size m, together with that witness.
std::pair<int, std::vector<uint64_t>> select_rich_color(const Coloring& c, uint64_t m,
                                                        const Rat& density_floor);

}  // namespace exppat
