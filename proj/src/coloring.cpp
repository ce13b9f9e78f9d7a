#include "exppat/coloring.hpp"

#include <sstream>

namespace exppat {

IntegerSet Coloring::color_class(int color) const {
  std::vector<bool> bits(size());
  for (uint64_t n = lo; n <= hi; ++n) bits[n - lo] = assign[n - lo] == color;
  return IntegerSet::explicit_window({lo, hi}, bits);
}

void validate_coloring(const Coloring& c) {
  if (c.lo < 1 || c.hi < c.lo) fail(Errc::BadWindow, "window must satisfy 1 <= lo <= hi");
  if (c.r < 1) fail(Errc::BadWindow, "need at least one color");
  if (c.assign.size() != c.size())
    fail(Errc::IncompleteColoring, "assignment covers " + std::to_string(c.assign.size()) +
                                       " of " + std::to_string(c.size()) + " positions");
  for (uint64_t n = c.lo; n <= c.hi; ++n) {
    int col = c.assign[n - c.lo];
    if (col == kUnassigned)
      fail(Errc::IncompleteColoring, std::to_string(n) + " has no color");
    if (col < 0 || col >= c.r)
      fail(Errc::ColorOutOfRange, std::to_string(n) + " has color " + std::to_string(col) +
                                      " but r = " + std::to_string(c.r));
  }
}

Coloring induced_exp_coloring(const Coloring& c) {
  validate_coloring(c);
  if (c.lo != 1) fail(Errc::BadWindow, "induced coloring needs window [1, N]");
  if (c.hi < 2) fail(Errc::WindowTooSmall, "no n >= 1 with 2^n <= N for N < 2");
  uint64_t d_hi = floor_log2_u64(c.hi);
  Coloring d;
  d.lo = 1;
  d.hi = d_hi;
  d.r = c.r;
  d.assign.resize(d_hi);
  uint64_t p = 1;
  for (uint64_t n = 1; n <= d_hi; ++n) {
    p <<= 1;
    d.assign[n - 1] = c.color_of(p);
  }
  return d;
}

std::tuple<ExpValue, ExpValue, ExpValue> lift_exp_witness(const Nat& x, const Nat& y) {
  if (x < 1 || y < 1) fail(Errc::BadArgument, "lift needs x, y >= 1");
  if (x > 100000000) fail(Errc::BadArgument, "exponent 2^x too wide to represent");
  Nat e = y;
  mpz_mul_2exp(e.get_mpz_t(), e.get_mpz_t(), x.get_ui());  // y * 2^x
  return {ExpValue::pow2(x), ExpValue::pow2(y), ExpValue::pow2(e)};
}

std::string format_coloring(const Coloring& c) {
  if (c.lo != 1) fail(Errc::BadWindow, "text format covers windows [1, N] only");
  std::ostringstream os;
  os << c.hi << " " << c.r << "\n";
  for (uint64_t n = 1; n <= c.hi; ++n) {
    if (n > 1) os << " ";
    os << c.assign[n - 1];
  }
  os << "\n";
  return os.str();
}

Coloring parse_coloring(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) fail(Errc::ParseError, "line 1: missing header");
  std::istringstream header(line);
  uint64_t n = 0;
  int r = 0;
  if (!(header >> n >> r) || n < 1 || r < 1)
    fail(Errc::ParseError, "line 1: expected 'N r' with N, r >= 1");
  std::string rest;
  if (header >> rest) fail(Errc::ParseError, "line 1: trailing token '" + rest + "'");

  if (!std::getline(is, line)) fail(Errc::ParseError, "line 2: missing assignment");
  std::istringstream body(line);
  Coloring c;
  c.lo = 1;
  c.hi = n;
  c.r = r;
  c.assign.reserve(n);
  long long col;
  while (body >> col) c.assign.push_back(static_cast<int>(col));
  if (body.fail() && !body.eof()) fail(Errc::ParseError, "line 2: non-numeric color index");
  if (c.assign.size() != n)
    fail(Errc::ParseError, "line 2: expected " + std::to_string(n) + " color indices, got " +
                               std::to_string(c.assign.size()));
  validate_coloring(c);
  return c;
}

}  // namespace exppat
