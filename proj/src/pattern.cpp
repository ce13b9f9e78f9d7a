#include "exppat/pattern.hpp"

#include <sstream>

namespace exppat {

PatternSpec PatternSpec::schur() { return {PatternKind::Schur, 1, 1, false}; }

PatternSpec PatternSpec::ap_of_length(uint64_t len) {
  if (len < 2) fail(Errc::BadArgument, "progressions need at least 2 terms");
  return {PatternKind::Ap, len - 1, 1, false};
}

PatternSpec PatternSpec::brauer(uint64_t ell) { return {PatternKind::Brauer, ell, 1, false}; }

PatternSpec PatternSpec::gen_schur(uint64_t ell) { return {PatternKind::GenSchur, ell, 1, false}; }

PatternSpec PatternSpec::exp_two_triple() { return {PatternKind::ExpTwoTriple, 1, 1, false}; }

PatternSpec PatternSpec::exp_triple() { return {PatternKind::ExpTriple, 1, 2, false}; }

void PatternSpec::validate() const {
  if (ell < 1) fail(Errc::BadArgument, "ell must be >= 1");
  if (min_element < 1) fail(Errc::BadArgument, "min_element must be >= 1");
}

size_t PatternSpec::member_count() const {
  switch (kind) {
    case PatternKind::Schur: return 3;
    case PatternKind::Ap: return ell + 1;
    case PatternKind::Brauer: return ell + 2;
    case PatternKind::GenSchur: return 3;
    case PatternKind::ExpTwoTriple: return 3;
    case PatternKind::ExpTriple: return 3;
  }
  return 0;
}

std::string PatternSpec::name() const {
  switch (kind) {
    case PatternKind::Schur: return "schur";
    case PatternKind::Ap: return "ap(" + std::to_string(ell + 1) + ")";
    case PatternKind::Brauer: return "brauer(" + std::to_string(ell) + ")";
    case PatternKind::GenSchur: return "genschur(" + std::to_string(ell) + ")";
    case PatternKind::ExpTwoTriple: return "exp2";
    case PatternKind::ExpTriple: return "exp";
  }
  return "?";
}

std::vector<Nat> PatternSpec::members(const Nat& s0, const Nat& s1) const {
  std::vector<Nat> vals;
  switch (kind) {
    case PatternKind::Schur:
      vals = {s0, s1, s0 + s1};
      break;
    case PatternKind::Ap:
      for (uint64_t i = 0; i <= ell; ++i) vals.push_back(s0 + Nat(static_cast<unsigned long>(i)) * s1);
      break;
    case PatternKind::Brauer:
      vals.push_back(s0);
      vals.push_back(s1);
      for (uint64_t i = 1; i <= ell; ++i) vals.push_back(s0 + Nat(static_cast<unsigned long>(i)) * s1);
      break;
    case PatternKind::GenSchur:
      vals = {s0, s1, s0 + Nat(static_cast<unsigned long>(ell)) * s1};
      break;
    case PatternKind::ExpTwoTriple: {
      if (!s0.fits_ulong_p() || s0 > 100000000) fail(Errc::BadArgument, "2^x too wide");
      Nat third = s1;
      mpz_mul_2exp(third.get_mpz_t(), third.get_mpz_t(), s0.get_ui());
      vals = {s0, s1, third};
      break;
    }
    case PatternKind::ExpTriple: {
      if (!s0.fits_ulong_p()) fail(Errc::BadArgument, "exponent too large");
      Nat bits(mpz_sizeinbase(s1.get_mpz_t(), 2));
      if (bits * s0 > 100000000) fail(Errc::BadArgument, "b^a too wide to represent");
      Nat third;
      mpz_pow_ui(third.get_mpz_t(), s1.get_mpz_t(), s0.get_ui());
      vals = {s0, s1, third};
      break;
    }
  }
  return vals;
}

std::optional<std::vector<uint64_t>> PatternSpec::members_within(uint64_t s0, uint64_t s1,
                                                                uint64_t n) const {
  uint64_t floor_val = min_element < 1 ? 1 : min_element;
  std::vector<uint64_t> vals;
  auto push = [&](uint64_t v) {
    if (v < floor_val || v > n) return false;
    vals.push_back(v);
    return true;
  };
  switch (kind) {
    case PatternKind::Schur:
      if (!push(s0) || !push(s1)) return std::nullopt;
      if (s1 > n - s0) return std::nullopt;  // s0 + s1 > n without overflow
      if (!push(s0 + s1)) return std::nullopt;
      break;
    case PatternKind::Ap:
    case PatternKind::Brauer:
    case PatternKind::GenSchur: {
      if (!push(s0)) return std::nullopt;
      if (kind != PatternKind::Ap && !push(s1)) return std::nullopt;
      uint64_t v = s0;
      for (uint64_t i = 1; i <= ell; ++i) {
        if (s1 > n - v) return std::nullopt;
        v += s1;
        if (kind == PatternKind::GenSchur) {
          if (i == ell && !push(v)) return std::nullopt;
        } else if (!push(v)) {
          return std::nullopt;
        }
      }
      break;
    }
    case PatternKind::ExpTwoTriple: {
      if (!push(s0) || !push(s1)) return std::nullopt;
      if (s0 >= 64 || (s1 > (n >> s0))) return std::nullopt;  // 2^s0 * s1 > n
      if (!push(s1 << s0)) return std::nullopt;
      break;
    }
    case PatternKind::ExpTriple: {
      if (!push(s0) || !push(s1)) return std::nullopt;
      uint64_t pw = 1;
      if (s1 > 1) {
        for (uint64_t i = 0; i < s0; ++i) {
          if (pw > n / s1) return std::nullopt;  // next multiply exceeds n
          pw *= s1;
        }
      }
      if (!push(pw)) return std::nullopt;
      break;
    }
  }
  if (require_distinct) {
    for (size_t i = 0; i < vals.size(); ++i)
      for (size_t j = i + 1; j < vals.size(); ++j)
        if (vals[i] == vals[j]) return std::nullopt;
  }
  return vals;
}

PatternSpec PatternSpec::parse(const std::string& text) {
  std::string base = text;
  uint64_t arg = 0;
  bool has_arg = false;
  auto open = text.find('(');
  if (open != std::string::npos) {
    if (text.back() != ')') fail(Errc::ParseError, "bad pattern syntax '" + text + "'");
    base = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::ParseError, "bad pattern parameter in '" + text + "'");
    arg = std::stoull(inner);
    has_arg = true;
  }
  PatternSpec out;
  if (base == "schur" && !has_arg)
    out = schur();
  else if (base == "ap")
    out = ap_of_length(has_arg ? arg : 3);
  else if (base == "brauer")
    out = brauer(has_arg ? arg : 1);
  else if (base == "genschur")
    out = gen_schur(has_arg ? arg : 1);
  else if (base == "exp2" && !has_arg)
    out = exp_two_triple();
  else if (base == "exp" && !has_arg)
    out = exp_triple();
  else
    fail(Errc::ParseError, "unknown pattern '" + text + "'");
  out.validate();
  return out;
}

bool Witness::recompute_ok() const {
  std::vector<Nat> expected;
  try {
    expected = pattern.members(slots[0], slots[1]);
  } catch (const Error&) {
    return false;
  }
  return expected == values;
}

std::string Witness::line() const {
  std::ostringstream os;
  os << pattern.name() << " slots=(" << slots[0] << "," << slots[1] << ") values=(";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) os << ",";
    os << values[i];
  }
  os << ")";
  if (color) os << " color=" << *color;
  return os.str();
}

}  // namespace exppat
