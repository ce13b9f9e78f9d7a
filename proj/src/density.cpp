#include "exppat/density.hpp"

#include <algorithm>
#include <map>

#include "exppat/error.hpp"

namespace exppat {

namespace {

// Leftmost run of k consecutive members of `a` starting at or after `start`.
std::optional<std::pair<uint64_t, uint64_t>> scan_interval(const IntegerSet& a, uint64_t k,
                                                           uint64_t start, uint64_t hi) {
  if (k == 0 || start > hi || hi - start + 1 < k) return std::nullopt;
  uint64_t run = 0;
  for (uint64_t n = start; n <= hi; ++n) {
    run = a.contains(Nat(n)) ? run + 1 : 0;
    if (run >= k) return std::make_pair(n - k + 1, n);
  }
  return std::nullopt;
}

std::vector<uint64_t> sorted_distinct(std::vector<uint64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

DensityProfile density_profile(const IntegerSet& a, uint64_t n_min, uint64_t n_max) {
  if (n_min < 1 || n_min > n_max)
    fail(Errc::BadWindow, "density window [" + std::to_string(n_min) + ", " +
                              std::to_string(n_max) + "] is empty");
  DensityProfile p;
  p.set = a;
  p.n_min = n_min;
  p.n_max = n_max;
  p.counts.reserve(n_max);
  uint64_t count = 0;
  bool first = true;
  for (uint64_t n = 1; n <= n_max; ++n) {
    if (a.contains(Nat(n))) ++count;
    p.counts.push_back(count);
    if (n < n_min) continue;
    Rat ratio(count, n);
    ratio.canonicalize();
    if (first || ratio < p.min_ratio) p.min_ratio = ratio;
    if (first || ratio > p.max_ratio) p.max_ratio = ratio;
    first = false;
  }
  return p;
}

std::optional<std::pair<uint64_t, uint64_t>> find_thick_interval(const IntegerSet& a, uint64_t k,
                                                                 Window window) {
  if (window.lo < 1 || window.lo > window.hi)
    fail(Errc::BadWindow, "interval search window is empty");
  if (k == 0) fail(Errc::BadArgument, "interval length must be positive");
  return scan_interval(a, k, window.lo, window.hi);
}

std::vector<uint64_t> difference_list(const std::vector<uint64_t>& x) {
  std::vector<uint64_t> xs = sorted_distinct(x);
  std::vector<uint64_t> out;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) out.push_back(xs[j] - xs[i]);
  return sorted_distinct(out);
}

IntegerSet difference_set(const std::vector<uint64_t>& x) {
  std::vector<Nat> members;
  for (uint64_t d : difference_list(x)) members.emplace_back(d);
  return IntegerSet::finite(members);
}

std::vector<uint64_t> thick_to_delta(const IntegerSet& a, uint64_t m, Window window) {
  if (window.lo < 1 || window.lo > window.hi || window.hi > (uint64_t(1) << 62))
    fail(Errc::BadWindow, "delta extraction window is empty or too wide");
  if (m == 0) fail(Errc::BadArgument, "requested witness size must be positive");
  std::vector<uint64_t> x;
  uint64_t sum = 0;       // sum of elements chosen so far
  uint64_t prev = window.lo - 1;
  for (uint64_t k = 0; k < m; ++k) {
    if (sum >= window.hi)
      fail(Errc::NotThickEnough, "set has no interval of length " + std::to_string(sum + 1) +
                                     " inside the window");
    auto iv = scan_interval(a, sum + 1, prev + 1, window.hi);
    if (!iv)
      fail(Errc::NotThickEnough, "set has no interval of length " + std::to_string(sum + 1) +
                                     " past " + std::to_string(prev) + " in the window");
    // Right endpoint: its difference with any earlier pick lands back in the
    // interval, hence in the set.
    uint64_t mk = iv->second;
    x.push_back(mk);
    sum += mk;
    prev = mk;
  }
  for (uint64_t d : difference_list(x))
    if (!a.contains(Nat(d)))
      fail(Errc::PreconditionFailed, "difference " + std::to_string(d) + " escaped the set");
  return x;
}

DeltaIntersection delta_intersection_witness(const IntegerSet& a, const std::vector<uint64_t>& x,
                                             Window window) {
  if (window.lo < 1 || window.lo > window.hi)
    fail(Errc::BadWindow, "shift search window is empty");
  std::vector<uint64_t> xs = sorted_distinct(x);
  if (xs.size() < 2) fail(Errc::BadArgument, "need at least two base points");
  // Least shift n with two of n + X in A; the two least hits give the
  // lexicographically least pair.
  for (uint64_t n = 0; n + xs[1] <= window.hi; ++n) {
    uint64_t first = 0;
    bool have_first = false;
    for (uint64_t xi : xs) {
      uint64_t t = n + xi;
      if (t > window.hi) break;
      if (t < window.lo || !a.contains(Nat(t))) continue;
      if (!have_first) {
        first = xi;
        have_first = true;
      } else {
        DeltaIntersection w;
        w.x1 = first;
        w.x2 = xi;
        w.a1 = n + first;
        w.a2 = n + xi;
        w.d = xi - first;
        return w;
      }
    }
  }
  fail(Errc::NoWitnessInWindow, "no shift places two base points inside the set");
}

std::pair<std::vector<uint64_t>, int> ramsey_homogeneous_pairs(
    uint64_t n, int r, const std::function<int(uint64_t, uint64_t)>& pair_color) {
  if (n < 2) fail(Errc::BadArgument, "need at least two vertices");
  if (r < 1) fail(Errc::BadArgument, "need at least one color");
  std::vector<uint64_t> live(n);
  for (uint64_t i = 0; i < n; ++i) live[i] = i + 1;
  std::vector<std::pair<uint64_t, int>> chain;  // (vertex, label of its kept class)
  while (live.size() >= 2) {
    uint64_t v = live.front();
    std::vector<std::vector<uint64_t>> classes(r);
    for (size_t i = 1; i < live.size(); ++i) {
      int col = pair_color(v, live[i]);
      if (col < 0 || col >= r)
        fail(Errc::ColorOutOfRange, "pair color " + std::to_string(col) + " out of range");
      classes[col].push_back(live[i]);
    }
    int best = 0;
    for (int i = 1; i < r; ++i)
      if (classes[i].size() > classes[best].size()) best = i;
    chain.emplace_back(v, best);
    live = std::move(classes[best]);
  }
  std::vector<uint64_t> label_count(r, 0);
  for (auto& [v, lab] : chain) ++label_count[lab];
  int major = 0;
  for (int i = 1; i < r; ++i)
    if (label_count[i] > label_count[major]) major = i;
  std::vector<uint64_t> h;
  for (auto& [v, lab] : chain)
    if (lab == major) h.push_back(v);
  h.push_back(live.front());  // final survivor joins every majority vertex's class
  return {h, major};
}

std::pair<int, std::vector<uint64_t>> delta_partition_regular(
    const std::vector<uint64_t>& x, int r, const std::function<int(uint64_t)>& diff_color) {
  std::vector<uint64_t> xs = sorted_distinct(x);
  if (xs.size() < 2) fail(Errc::BadArgument, "need at least two base points");
  auto pair_color = [&](uint64_t i, uint64_t j) {
    return diff_color(xs[j - 1] - xs[i - 1]);
  };
  auto [idx, color] = ramsey_homogeneous_pairs(xs.size(), r, pair_color);
  std::vector<uint64_t> y;
  for (uint64_t i : idx) y.push_back(xs[i - 1]);
  for (uint64_t d : difference_list(y))
    if (diff_color(d) != color)
      fail(Errc::PreconditionFailed, "difference " + std::to_string(d) + " left the color class");
  return {color, y};
}

std::pair<uint64_t, uint64_t> gen_schur_from_delta(const IntegerSet& a,
                                                   const std::vector<uint64_t>& x, uint64_t ell,
                                                   Window window) {
  if (ell == 0) fail(Errc::BadArgument, "coefficient must be positive");
  std::vector<uint64_t> xs = sorted_distinct(x);
  if (xs.size() < 2) fail(Errc::BadArgument, "need at least two base points");
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (!a.contains(Nat(xs[j] - xs[i])))
        fail(Errc::PreconditionFailed, "base set is not a delta-witness for the set");
  std::vector<uint64_t> lx;
  for (uint64_t xi : xs) {
    if (xi > window.hi / ell) break;  // too large to ever land in the window
    lx.push_back(ell * xi);
  }
  if (lx.size() < 2) fail(Errc::NoWitnessInWindow, "scaled base points leave the window");
  DeltaIntersection w = delta_intersection_witness(a, lx, window);
  uint64_t b = w.a1;
  uint64_t c = w.d / ell;  // = x2 - x1, a difference of the witness set
  if (!a.contains(Nat(b)) || !a.contains(Nat(c)) || !a.contains(Nat(b + ell * c)))
    fail(Errc::PreconditionFailed, "differences of the base set must lie in the set");
  return {b, c};
}

std::pair<int, std::vector<uint64_t>> select_rich_color(const Coloring& c, uint64_t m,
                                                        const Rat& density_floor) {
  validate_coloring(c);
  if (m == 0) fail(Errc::BadArgument, "requested witness size must be positive");
  Window window{c.lo, c.hi};
  uint64_t width = c.hi - c.lo + 1;
  auto dense_enough = [&](int i) {
    uint64_t count = 0;
    for (int col : c.assign)
      if (col == i) ++count;
    Rat ratio(count, width);
    ratio.canonicalize();
    return ratio >= density_floor;
  };
  // First pass: a color class that is itself thick enough to carry a witness.
  for (int i = 0; i < c.r; ++i) {
    if (!dense_enough(i)) continue;
    try {
      return {i, thick_to_delta(c.color_class(i), m, window)};
    } catch (const Error& e) {
      if (e.code() != Errc::NotThickEnough) throw;
    }
  }
  // Second pass: pull a witness out of the full window and shrink it to one
  // color with the pair-Ramsey step; grow the seed until the survivor has
  // size m. Differences of window elements need colors, so the window must
  // start at 1.
  if (c.lo != 1)
    fail(Errc::NoRichColor, "no color class carries a difference witness of size " +
                                std::to_string(m));
  IntegerSet all = IntegerSet::interval(c.lo, c.hi);
  auto diff_color = [&](uint64_t d) { return c.color_of(d); };
  for (uint64_t seed = m;; ++seed) {
    std::vector<uint64_t> x0;
    try {
      x0 = thick_to_delta(all, seed, window);
    } catch (const Error& e) {
      if (e.code() != Errc::NotThickEnough) throw;
      break;
    }
    auto [color, y] = delta_partition_regular(x0, c.r, diff_color);
    if (y.size() >= m && dense_enough(color)) return {color, y};
  }
  fail(Errc::NoRichColor, "no color class carries a difference witness of size " +
                              std::to_string(m));
}

}  // namespace exppat
