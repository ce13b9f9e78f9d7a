#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "exppat/exp_value.hpp"
#include "exppat/integer_set.hpp"

using namespace exppat;

TEST_CASE("congruence membership, including arbitrary precision") {
  IntegerSet m3 = IntegerSet::multiples_of(3);
  CHECK(m3.contains(3));
  CHECK(m3.contains(999));
  CHECK(!m3.contains(1000));
  CHECK(m3.contains(Nat("300000000000000000000000000000")));
  CHECK(!m3.contains(Nat("300000000000000000000000000001")));
  IntegerSet odd = IntegerSet::congruence(1, 2);
  CHECK(odd.contains(7));
  CHECK(!odd.contains(8));
  CHECK(IntegerSet::naturals().contains(1));
  CHECK(!IntegerSet::naturals().contains(Nat(0)));
  CHECK(!IntegerSet::empty().contains(1));
}

TEST_CASE("finite, interval, and combinators agree with direct predicates") {
  IntegerSet s = IntegerSet::finite({Nat(2), Nat(5), Nat(11)});
  IntegerSet iv = IntegerSet::interval(4, 9);
  IntegerSet u = IntegerSet::union_of({s, iv});
  IntegerSet x = IntegerSet::inter_of({u, IntegerSet::congruence(1, 2)});
  IntegerSet c = IntegerSet::complement_of(u);
  for (uint64_t n = 1; n <= 20; ++n) {
    bool in_s = n == 2 || n == 5 || n == 11;
    bool in_iv = 4 <= n && n <= 9;
    CHECK(s.contains(n) == in_s);
    CHECK(iv.contains(n) == in_iv);
    CHECK(u.contains(n) == (in_s || in_iv));
    CHECK(x.contains(n) == ((in_s || in_iv) && n % 2 == 1));
    CHECK(c.contains(n) == !(in_s || in_iv));
  }
}

TEST_CASE("quotient by powers of two") {
  // {m | 2^s m in inner}
  IntegerSet q1 = IntegerSet::quotient_pow2(IntegerSet::multiples_of(3), 2);
  IntegerSet q2 = IntegerSet::quotient_pow2(IntegerSet::multiples_of(2), 1);
  IntegerSet q3 = IntegerSet::quotient_pow2(IntegerSet::finite({Nat(8)}), 2);
  for (uint64_t m = 1; m <= 30; ++m) {
    CHECK(q1.contains(m) == (m % 3 == 0));  // 4 invertible mod 3
    CHECK(q2.contains(m));                  // 2m always even
    CHECK(q3.contains(m) == (m == 2));
  }
}

TEST_CASE("explicit windows answer only inside their window") {
  IntegerSet e = IntegerSet::explicit_window({3, 7}, {true, false, true, true, false});
  CHECK(e.is_explicit());
  CHECK(e.contains(3));
  CHECK(!e.contains(4));
  CHECK(e.contains(5));
  CHECK_THROWS_AS((void)e.contains(2), Error);
  CHECK_THROWS_AS((void)e.contains(8), Error);
  CHECK(e.evaluable_on(3, 7));
  CHECK(!e.evaluable_on(3, 8));
  CHECK(e.count_in(3, 7) == 3);
  CHECK(e.explicit_window_bounds().lo == 3);
  CHECK(e.explicit_window_bounds().hi == 7);
  // Combinators inherit the narrowest window.
  IntegerSet mix = IntegerSet::inter_of({e, IntegerSet::multiples_of(1)});
  CHECK(!mix.evaluable_on(1, 7));
  CHECK(IntegerSet::multiples_of(2).evaluable_on(1, uint64_t(1) << 60));
}

TEST_CASE("predicate rule") {
  IntegerSet p = IntegerSet::predicate("squares", [](const Nat& n) {
    Nat r = sqrt(n);
    return r * r == n;
  });
  CHECK(p.contains(16));
  CHECK(!p.contains(17));
  CHECK(p.str() == "squares");
  CHECK(p.evaluable_on(1, 1000000));
  CHECK_THROWS_AS((void)p.contains(ExpValue::pow2(200)), Error);
  CHECK(p.contains(ExpValue::pow2(8)));  // 256 expands and tests fine
}

TEST_CASE("membership of symbolic power-of-two values") {
  ExpValue big = ExpValue::prod({ExpValue::pow2(100), ExpValue::num(3)});  // 2^100 * 3
  CHECK(IntegerSet::multiples_of(2).contains(big));
  CHECK(IntegerSet::multiples_of(3).contains(big));
  CHECK(!IntegerSet::congruence(1, 2).contains(big));
  // 2^100 * 3 mod 5: 2^100 = (2^4)^25 = 1 mod 5, so value = 3 mod 5.
  CHECK(IntegerSet::congruence(3, 5).contains(big));
  CHECK(!IntegerSet::multiples_of(5).contains(big));
  CHECK(IntegerSet::finite({Nat(8)}).contains(ExpValue::pow2(3)));
  CHECK(!IntegerSet::finite({Nat(8)}).contains(ExpValue::pow2(4)));
  CHECK(IntegerSet::complement_of(IntegerSet::multiples_of(5)).contains(big));
  // Cross-check congruences of 2^e * m against mpz_powm over random cases.
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    uint64_t e = rng() % 1000000, m2 = 1 + 2 * (rng() % 500), mod = 1 + rng() % 97;
    ExpValue v = ExpValue::prod({ExpValue::pow2(e), ExpValue::num(m2)});
    Nat base = 2, expn = e, modn = mod, r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), expn.get_mpz_t(), modn.get_mpz_t());
    Nat residue = (r * m2) % modn;
    CHECK(IntegerSet::congruence(residue, mod).contains(v));
  }
}

TEST_CASE("parse and str round-trip") {
  const char* exprs[] = {
      "mod 0 3",
      "set {1,2,3}",
      "set {}",
      "interval [4,9]",
      "union(mod 0 2, set {5})",
      "inter(mod 0 2, mod 0 3)",
      "compl(mod 0 7)",
      "quot(mod 0 3, 2)",
      "union(inter(mod 1 4, interval [1,50]), compl(set {10,20}))",
  };
  for (const char* text : exprs) {
    IntegerSet s = IntegerSet::parse(text);
    IntegerSet back = IntegerSet::parse(s.str());
    for (uint64_t n = 1; n <= 60; ++n) CHECK(s.contains(n) == back.contains(n));
  }
  CHECK(IntegerSet::parse("  mod  0  3 ").contains(9));
  CHECK(IntegerSet::parse("mod 0 3").str() == "mod 0 3");
}

TEST_CASE("parse rejects malformed input") {
  const char* bad[] = {
      "", "frob 1 2", "mod 0", "set {1,2", "interval [3]", "union(mod 0 2",
      "mod 0 3 trailing", "quot(mod 0 2)", "set {a}",
  };
  for (const char* text : bad) {
    try {
      (void)IntegerSet::parse(text);
      FAIL("expected ParseError for: " << text);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
    }
  }
}

TEST_CASE("count_in agrees with membership scan") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    uint64_t mod = 1 + rng() % 10, res = rng() % mod;
    IntegerSet s = IntegerSet::congruence(res, mod);
    uint64_t lo = 1 + rng() % 50, hi = lo + rng() % 200;
    uint64_t manual = 0;
    for (uint64_t n = lo; n <= hi; ++n) manual += s.contains(n);
    CHECK(s.count_in(lo, hi) == manual);
  }
}
