#include "exppat/exp_value.hpp"

#include <sstream>

namespace exppat {

ExpValue ExpValue::num(const Nat& n) {
  if (n < 1) fail(Errc::BadArgument, "ExpValue holds naturals >= 1");
  auto two_adic = mpz_scan1(n.get_mpz_t(), 0);  // index of lowest set bit
  Nat m;
  mpz_tdiv_q_2exp(m.get_mpz_t(), n.get_mpz_t(), two_adic);
  return ExpValue(Nat(static_cast<unsigned long>(two_adic)), std::move(m));
}

ExpValue ExpValue::pow2(const Nat& e) {
  if (e < 0) fail(Errc::BadArgument, "negative exponent");
  return ExpValue(e, Nat(1));
}

ExpValue ExpValue::prod(const std::vector<ExpValue>& factors) {
  ExpValue acc;  // 1
  for (const auto& f : factors) acc = acc.times(f);
  return acc;
}

ExpValue ExpValue::times(const ExpValue& o) const {
  return ExpValue(exp_ + o.exp_, odd_ * o.odd_);
}

ExpValue ExpValue::shifted(const Nat& add_exp) const {
  if (add_exp < 0) fail(Errc::BadArgument, "negative shift");
  return ExpValue(exp_ + add_exp, odd_);
}

ExpValue ExpValue::pow_nat(const Nat& k) const {
  if (k < 0) fail(Errc::BadArgument, "negative power");
  if (k == 0) return ExpValue();
  Nat e = exp_ * k;
  if (odd_ == 1) return ExpValue(std::move(e), Nat(1));
  Nat mbits(mpz_sizeinbase(odd_.get_mpz_t(), 2));
  if (mbits * k > 100000000) fail(Errc::BadArgument, "pow_nat expansion too large");
  Nat m;
  mpz_pow_ui(m.get_mpz_t(), odd_.get_mpz_t(), k.get_ui());
  return ExpValue(std::move(e), std::move(m));
}

Nat ExpValue::bit_length() const {
  return exp_ + Nat(mpz_sizeinbase(odd_.get_mpz_t(), 2));
}

std::optional<Nat> ExpValue::to_nat(uint64_t max_bits) const {
  if (bit_length() > Nat(static_cast<unsigned long>(max_bits))) return std::nullopt;
  Nat r = odd_;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp_.get_ui());
  return r;
}

int ExpValue::compare(const Nat& bound) const {
  if (bound < 1) return 1;
  unsigned long bound_bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  // Values strictly wider than the bound exceed it; only expand narrow ones.
  if (bit_length() > Nat(bound_bits)) return 1;
  Nat v = *to_nat(bound_bits + 1);
  return cmp(v, bound) < 0 ? -1 : (v == bound ? 0 : 1);
}

std::string ExpValue::str() const {
  if (bit_length() <= 64) return to_nat(64)->get_str();
  std::ostringstream os;
  os << "2^" << exp_.get_str();
  if (odd_ != 1) os << "*" << odd_.get_str();
  return os.str();
}

}  // namespace exppat
