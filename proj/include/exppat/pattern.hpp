#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "exppat/nat.hpp"

namespace exppat {

// The pattern families hunted for. Every kind has two free slots:
//   Schur        (a, b)  ->  {a, b, a+b}            (canonicalized a <= b)
//   Ap           (a, d)  ->  {a, a+d, ..., a+ell*d}
//   Brauer       (b, c)  ->  {b, c, b+c, ..., b+ell*c}
//   GenSchur     (b, c)  ->  {b, c, b+ell*c}
//   ExpTwoTriple (x, y)  ->  {x, y, 2^x * y}
//   ExpTriple    (a, b)  ->  {a, b, b^a}
enum class PatternKind { Schur, Ap, Brauer, GenSchur, ExpTwoTriple, ExpTriple };

struct PatternSpec {
  PatternKind kind = PatternKind::Schur;
  uint64_t ell = 1;          // parameter for Ap/Brauer/GenSchur
  uint64_t min_element = 1;  // smallest admissible member value
  bool require_distinct = false;

  static PatternSpec schur();
  static PatternSpec ap_of_length(uint64_t len);  // len-term progressions, len >= 2
  static PatternSpec brauer(uint64_t ell);
  static PatternSpec gen_schur(uint64_t ell);
  static PatternSpec exp_two_triple();
  static PatternSpec exp_triple();  // min_element defaults to 2 (degenerate a=1/b=1 excluded)

  // Inverse of name(): "schur", "ap(3)", "brauer(2)", "genschur(1)", "exp2",
  // "exp"; bare "ap" means 3-term progressions, bare "brauer"/"genschur"
  // take ell = 1.
  static PatternSpec parse(const std::string& text);

  void validate() const;
  size_t member_count() const;
  std::string name() const;  // "schur", "ap(3)", "brauer(2)", ...

  // Exact member values, no cap. ExpTriple slots must keep b^a representable.
  std::vector<Nat> members(const Nat& s0, const Nat& s1) const;

  // Member values if all lie in [max(min_element, 1), n], else nullopt.
  // Exponentials are computed with early abort; no overflow, no floats.
  std::optional<std::vector<uint64_t>> members_within(uint64_t s0, uint64_t s1, uint64_t n) const;
};

struct Witness {
  PatternSpec pattern;
  std::array<Nat, 2> slots;
  std::vector<Nat> values;
  std::optional<int> color;

  // values must equal the members recomputed from slots.
  bool recompute_ok() const;
  // One-line certificate: `kind slots=(..) values=(..) color=j`.
  std::string line() const;
};

}  // namespace exppat
