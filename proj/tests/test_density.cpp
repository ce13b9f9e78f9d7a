#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "exppat/density.hpp"
#include "oracles.hpp"

using namespace exppat;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::BadArgument;
}

bool diffs_inside(const std::vector<uint64_t>& x, const IntegerSet& a) {
  for (uint64_t d : difference_list(x))
    if (!a.contains(d)) return false;
  return true;
}

}  // namespace

TEST_CASE("density_profile: exact counts and ratios") {
  DensityProfile evens = density_profile(IntegerSet::multiples_of(2), 10, 10);
  CHECK(evens.count_at(10) == 5);
  CHECK(evens.min_ratio == Rat(1, 2));
  CHECK(evens.max_ratio == Rat(1, 2));

  DensityProfile full = density_profile(IntegerSet::interval(1, 100), 1, 100);
  CHECK(full.min_ratio == 1);
  CHECK(full.max_ratio == 1);

  DensityProfile none = density_profile(IntegerSet::empty(), 1, 100);
  CHECK(none.min_ratio == 0);
  CHECK(none.max_ratio == 0);

  DensityProfile m3 = density_profile(IntegerSet::multiples_of(3), 1, 9);
  CHECK(m3.count_at(1) == 0);
  CHECK(m3.count_at(3) == 1);
  CHECK(m3.count_at(9) == 3);
  CHECK(m3.min_ratio == Rat(0));
  CHECK(m3.max_ratio == Rat(1, 3));
  for (uint64_t n = 2; n <= 9; ++n) {
    CHECK(m3.count_at(n) >= m3.count_at(n - 1));
    CHECK(m3.count_at(n) - m3.count_at(n - 1) <= 1);
  }
}

TEST_CASE("density invariants on random sets") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    uint64_t mod = 1 + rng() % 8, res = rng() % mod, n_max = 20 + rng() % 180;
    IntegerSet a = IntegerSet::congruence(res, mod);
    IntegerSet ac = IntegerSet::complement_of(a);
    DensityProfile pa = density_profile(a, 1, n_max);
    DensityProfile pc = density_profile(ac, 1, n_max);
    for (uint64_t n = 1; n <= n_max; ++n) {
      CHECK(pa.count_at(n) + pc.count_at(n) == n);  // complement identity
    }
    // Adding elements never decreases a ratio.
    IntegerSet bigger = IntegerSet::union_of({a, IntegerSet::congruence(rng() % 5, 5)});
    DensityProfile pb = density_profile(bigger, 1, n_max);
    CHECK(pb.min_ratio >= pa.min_ratio);
    CHECK(pb.max_ratio >= pa.max_ratio);
    CHECK(pa.min_ratio <= pa.max_ratio);
    CHECK(pa.max_ratio <= 1);
  }
}

TEST_CASE("find_thick_interval is leftmost") {
  auto hit = find_thick_interval(IntegerSet::interval(5, 9), 5, {1, 100});
  REQUIRE(hit.has_value());
  CHECK(hit->first == 5);
  CHECK(hit->second == 9);
  CHECK(!find_thick_interval(IntegerSet::multiples_of(2), 2, {1, 1000}).has_value());
  auto full = find_thick_interval(IntegerSet::interval(1, 100), 100, {1, 100});
  REQUIRE(full.has_value());
  CHECK(full->first == 1);
  CHECK(full->second == 100);
}

TEST_CASE("difference sets") {
  CHECK(difference_list({1, 3, 7}) == std::vector<uint64_t>{2, 4, 6});
  CHECK(difference_list({5}).empty());
  CHECK(difference_list({2, 4, 6, 8}) == std::vector<uint64_t>{2, 4, 6});
  IntegerSet d = difference_set({1, 3, 7});
  CHECK(d.contains(2));
  CHECK(d.contains(4));
  CHECK(d.contains(6));
  CHECK(!d.contains(3));
}

TEST_CASE("thick_to_delta runs the greedy interval chain") {
  std::vector<uint64_t> x = thick_to_delta(IntegerSet::interval(1, 1000), 3, {1, 1000});
  CHECK(x == std::vector<uint64_t>{1, 3, 8});
  CHECK(difference_list(x) == std::vector<uint64_t>{2, 5, 7});

  // A = {1} u [2,3] u [5,9] inside [1..9]
  IntegerSet a = IntegerSet::union_of(
      {IntegerSet::finite({Nat(1)}), IntegerSet::interval(2, 3), IntegerSet::interval(5, 9)});
  std::vector<uint64_t> y = thick_to_delta(a, 3, {1, 9});
  CHECK(y == std::vector<uint64_t>{1, 3, 9});
  CHECK(difference_list(y) == std::vector<uint64_t>{2, 6, 8});
  CHECK(diffs_inside(y, a));

  CHECK(code_of([] {
          (void)thick_to_delta(IntegerSet::multiples_of(2), 2, {1, 1000});
        }) == Errc::NotThickEnough);
}

TEST_CASE("delta_intersection_witness: constructive pigeonhole") {
  DeltaIntersection w = delta_intersection_witness(IntegerSet::multiples_of(2), {1, 2, 3}, {1, 100});
  CHECK(w.d == 2);
  CHECK(w.a1 == 2);
  CHECK(w.a2 == 4);
  CHECK(w.x1 == 1);
  CHECK(w.x2 == 3);

  DeltaIntersection v =
      delta_intersection_witness(IntegerSet::multiples_of(3), {3, 6, 9, 12, 15}, {1, 100});
  CHECK(v.d == 3);
  CHECK(v.a1 == 3);
  CHECK(v.a2 == 6);
  CHECK(v.x1 == 3);
  CHECK(v.x2 == 6);

  CHECK(code_of([] {
          (void)delta_intersection_witness(IntegerSet::multiples_of(3), {4, 8}, {1, 100});
        }) == Errc::NoWitnessInWindow);
}

TEST_CASE("ramsey_homogeneous_pairs greedy extraction") {
  auto [h0, c0] = ramsey_homogeneous_pairs(6, 2, [](uint64_t, uint64_t) { return 0; });
  CHECK(h0 == std::vector<uint64_t>{1, 2, 3, 4, 5, 6});
  CHECK(c0 == 0);

  auto parity = [](uint64_t i, uint64_t j) { return int((i + j) % 2); };
  auto [h1, c1] = ramsey_homogeneous_pairs(5, 2, parity);
  CHECK(oracle::homogeneous(h1, c1, parity));
  CHECK(h1 == std::vector<uint64_t>{1, 3, 5});
  CHECK(c1 == 0);

  auto [h2, c2] = ramsey_homogeneous_pairs(2, 2, [](uint64_t, uint64_t) { return 1; });
  CHECK(h2 == std::vector<uint64_t>{1, 2});
  CHECK(c2 == 1);
}

TEST_CASE("ramsey size bound for two colors") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    uint64_t n = 2 + rng() % 60;
    uint64_t seed = rng();
    auto color = [seed](uint64_t i, uint64_t j) {
      uint64_t h = (i * 1000003 + j) * 2654435761u + seed;
      return int((h >> 16) & 1);
    };
    auto [h, c] = ramsey_homogeneous_pairs(n, 2, color);
    CHECK(oracle::homogeneous(h, c, color));
    uint64_t bound = std::max<uint64_t>(2, floor_log2_u64(n) / 2);
    CHECK(h.size() >= bound);
  }
}

TEST_CASE("delta_partition_regular") {
  auto [i0, y0] = delta_partition_regular({2, 4, 6, 8, 10}, 1, [](uint64_t) { return 0; });
  CHECK(i0 == 0);
  CHECK(y0 == std::vector<uint64_t>{2, 4, 6, 8, 10});

  auto [i1, y1] = delta_partition_regular({1, 2, 3, 4, 5}, 2, [](uint64_t d) { return int(d % 2); });
  CHECK(i1 == 0);  // even differences get color 0
  CHECK(y1 == std::vector<uint64_t>{1, 3, 5});
  for (uint64_t d : difference_list(y1)) CHECK(d % 2 == 0);

  auto [i2, y2] = delta_partition_regular({7, 11}, 3, [](uint64_t) { return 2; });
  CHECK(i2 == 2);
  CHECK(y2 == std::vector<uint64_t>{7, 11});
}

TEST_CASE("gen_schur_from_delta builds b, c, b+ell*c inside A") {
  IntegerSet evens = IntegerSet::multiples_of(2);
  std::vector<uint64_t> x10 = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  auto [b1, c1] = gen_schur_from_delta(evens, x10, 3, {1, 100});
  CHECK(b1 == 6);
  CHECK(c1 == 2);
  CHECK(evens.contains(b1 + 3 * c1));

  auto [b2, c2] = gen_schur_from_delta(evens, x10, 1, {1, 100});
  CHECK(b2 == 2);
  CHECK(c2 == 2);
  CHECK(evens.contains(b2 + c2));

  IntegerSet m5 = IntegerSet::multiples_of(5);
  auto [b3, c3] = gen_schur_from_delta(m5, {5, 10, 15, 20, 25, 30, 35, 40, 45, 50}, 2, {1, 200});
  CHECK(b3 == 10);
  CHECK(c3 == 5);
  CHECK(m5.contains(b3 + 2 * c3));

  // Precondition Delta(X) subset of A is enforced.
  CHECK(code_of([&] {
          (void)gen_schur_from_delta(m5, {1, 2}, 1, {1, 100});
        }) == Errc::PreconditionFailed);
}

TEST_CASE("select_rich_color picks the least dense class with a witness") {
  Coloring half;
  half.lo = 1;
  half.hi = 100;
  half.r = 2;
  half.assign.resize(100);
  for (uint64_t n = 1; n <= 100; ++n) half.assign[n - 1] = n <= 50 ? 0 : 1;
  auto [i0, x0] = select_rich_color(half, 3, Rat(1, 4));
  CHECK(i0 == 0);
  CHECK(x0.size() == 3);
  IntegerSet c0 = half.color_class(0);
  CHECK(diffs_inside(x0, c0));

  Coloring lone;
  lone.lo = 1;
  lone.hi = 100;
  lone.r = 2;
  lone.assign.assign(100, 0);
  lone.assign[9] = 1;  // C_1 = {10}
  auto [i1, x1] = select_rich_color(lone, 3, Rat(1, 4));
  CHECK(i1 == 0);
  CHECK(diffs_inside(x1, lone.color_class(0)));

  Coloring tiny;
  tiny.lo = 1;
  tiny.hi = 4;
  tiny.r = 2;
  tiny.assign = {0, 1, 0, 1};
  CHECK(code_of([&] { (void)select_rich_color(tiny, 5, Rat(1, 4)); }) == Errc::NoRichColor);
}

TEST_CASE("randomized delta properties") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    // Thick sets: complement of a random finite set of punctures.
    std::vector<Nat> holes;
    for (uint64_t i = rng() % 7; i > 0; --i) holes.emplace_back(1 + rng() % 200);
    IntegerSet a = IntegerSet::complement_of(IntegerSet::finite(holes));
    uint64_t m = 2 + rng() % 4;
    std::vector<uint64_t> x = thick_to_delta(a, m, {1, 100000});
    CHECK(x.size() == m);
    CHECK(diffs_inside(x, a));

    // Pigeonhole witnesses on congruence sets with X inside the set.
    uint64_t k = 1 + rng() % 6;
    IntegerSet mk = IntegerSet::multiples_of(k);
    std::vector<uint64_t> xs;
    uint64_t v = k * (1 + rng() % 3);
    for (int i = 0; i < 4; ++i) {
      xs.push_back(v);
      v += k * (1 + rng() % 3);
    }
    DeltaIntersection w = delta_intersection_witness(mk, xs, {1, 100000});
    CHECK(w.a2 - w.a1 == w.d);
    CHECK(w.x2 - w.x1 == w.d);
    CHECK(mk.contains(w.a1));
    CHECK(mk.contains(w.a2));
    CHECK(std::find(xs.begin(), xs.end(), w.x1) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), w.x2) != xs.end());
  }
}
