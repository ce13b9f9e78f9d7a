#include "exppat/extract.hpp"

#include <map>
#include <sstream>

#include "exppat/error.hpp"
#include "exppat/exp_value.hpp"

namespace exppat {

void LargenessOracle::validate() const {
  if (window_w < 1) fail(Errc::BadArgument, "oracle window must be positive");
  if (threshold < 1) fail(Errc::BadArgument, "oracle threshold must be positive (properness)");
}

uint64_t LargenessOracle::count(const IntegerSet& s) const {
  validate();
  return s.count_in(1, window_w);
}

bool LargenessOracle::is_large(const IntegerSet& s) const {
  validate();
  uint64_t c = 0;
  Nat buf;
  for (uint64_t n = 1; n <= window_w; ++n) {
    buf = n;
    if (s.contains(buf) && ++c >= threshold) return true;
  }
  return false;
}

std::string LargenessOracle::str() const {
  return "LARGE(W=" + std::to_string(window_w) + ", tau=" + std::to_string(threshold) + ")";
}

IntegerSet quotient_set(const IntegerSet& a, uint64_t n) {
  return IntegerSet::quotient_pow2(a, n);
}

std::vector<uint64_t> a_hat(const IntegerSet& a, const LargenessOracle& oracle, uint64_t n_max) {
  oracle.validate();
  if (n_max < 1) fail(Errc::BadArgument, "scan bound must be positive");
  std::vector<uint64_t> out;
  for (uint64_t n = 1; n <= n_max; ++n)
    if (oracle.is_large(quotient_set(a, n))) out.push_back(n);
  return out;
}

IntegerSet a_hat_set(const IntegerSet& a, const LargenessOracle& oracle) {
  oracle.validate();
  auto memo = std::make_shared<std::map<uint64_t, bool>>();
  std::string label = "ahat(" + a.str() + ")";
  return IntegerSet::predicate(label, [a, oracle, memo](const Nat& n) {
    if (n > 100000)
      fail(Errc::WindowExceeded, "a-hat membership queried at oversized shift " + n.get_str());
    uint64_t nu = n.get_ui();
    auto it = memo->find(nu);
    if (it != memo->end()) return it->second;
    bool large = oracle.is_large(quotient_set(a, nu));
    memo->emplace(nu, large);
    return large;
  });
}

bool ExtractionReport::success() const {
  return failure_name.empty() && checks_passed() == checks_total();
}

uint64_t ExtractionReport::checks_passed() const {
  uint64_t n = 0;
  for (const auto& s : steps)
    for (const auto& c : s.checks)
      if (c.pass) ++n;
  return n;
}

uint64_t ExtractionReport::checks_total() const {
  uint64_t n = 0;
  for (const auto& s : steps) n += s.checks.size();
  return n;
}

std::string ExtractionReport::to_text() const {
  std::ostringstream os;
  for (size_t i = 0; i < steps.size(); ++i) {
    os << "STEP " << i + 1 << ": " << steps[i].description << " chose "
       << (steps[i].chosen.empty() ? "none" : steps[i].chosen) << "\n";
    for (const auto& c : steps[i].checks)
      os << "CHECK " << c.value << " in " << c.set << ": " << (c.pass ? "PASS" : "FAIL") << "\n";
  }
  if (!failure_name.empty()) os << "FAIL " << failure_name << ": " << failure_detail << "\n";
  os << "RESULT success=" << (success() ? "true" : "false") << " checks=" << checks_passed() << "/"
     << checks_total() << "\n";
  return os.str();
}

namespace {

ReportStep& push_step(ExtractionReport& rpt, const std::string& description) {
  rpt.steps.push_back(ReportStep{description, "", {}});
  return rpt.steps.back();
}

void add_check(ReportStep& step, const std::string& value, const std::string& set, bool pass) {
  step.checks.push_back(ReportCheck{value, set, pass});
}

// Membership check recorded in the report; returns the verdict.
bool check_member(ReportStep& step, const IntegerSet& s, const Nat& v) {
  bool ok = s.contains(v);
  add_check(step, v.get_str(), s.str(), ok);
  return ok;
}

bool check_member(ReportStep& step, const IntegerSet& s, const ExpValue& v) {
  bool ok = s.contains(v);
  add_check(step, v.str(), s.str(), ok);
  return ok;
}

bool check_large(ReportStep& step, const LargenessOracle& oracle, const IntegerSet& s) {
  bool ok = oracle.is_large(s);
  add_check(step, s.str(), oracle.str(), ok);
  return ok;
}

std::optional<uint64_t> least_member(const IntegerSet& s, uint64_t lo, uint64_t hi) {
  Nat buf;
  for (uint64_t n = lo; n <= hi; ++n) {
    buf = n;
    if (s.contains(buf)) return n;
  }
  return std::nullopt;
}

void set_failure(ExtractionReport& rpt, const std::string& name, const std::string& detail) {
  rpt.failure_name = name;
  rpt.failure_detail = detail;
}

}  // namespace

TripleExtraction extract_exp2_triple(const IntegerSet& a, const LargenessOracle& oracle,
                                     const SearchBudget& budget, uint64_t n_max) {
  oracle.validate();
  if (n_max < 1) fail(Errc::BadArgument, "scan bound must be positive");
  TripleExtraction out;
  ExtractionReport& rpt = out.report;
  IntegerSet ahat = a_hat_set(a, oracle);

  ReportStep& s1 = push_step(rpt, "pick least a in " + ahat.str());
  std::optional<uint64_t> av = least_member(ahat, 1, n_max);
  if (!av) {
    set_failure(rpt, "EmptyAHat",
                "no n <= " + std::to_string(n_max) + " with A/2^n large under " + oracle.str());
    return out;
  }
  s1.chosen = std::to_string(*av);
  check_large(s1, oracle, quotient_set(a, *av));

  IntegerSet star_set = IntegerSet::inter_of({quotient_set(a, *av), ahat});
  ReportStep& s2 = push_step(rpt, "star witness with l=2^" + std::to_string(*av) + " in " +
                                      star_set.str());
  if (*av > 62) {
    set_failure(rpt, "StarWitnessFailed", "coefficient 2^" + std::to_string(*av) +
                                              " exceeds the native range");
    return out;
  }
  if (!check_large(s2, oracle, star_set)) {
    set_failure(rpt, "StarWitnessFailed", "A/2^a ∩ Â is not large under " + oracle.str());
    return out;
  }
  uint64_t ell = uint64_t(1) << *av;
  uint64_t b, c;
  try {
    std::tie(b, c) = star_witness(star_set, ell, budget);
  } catch (const Error& e) {
    set_failure(rpt, "StarWitnessFailed", e.what());
    return out;
  }
  s2.chosen = "(b, c)=(" + std::to_string(b) + ", " + std::to_string(c) + ")";
  check_member(s2, star_set, Nat(b));
  check_member(s2, star_set, Nat(c));
  check_member(s2, star_set, Nat(b + ell * c));

  uint64_t shift2 = b + ell * c;
  if (shift2 > 100000) {
    set_failure(rpt, "StarWitnessFailed",
                "witness shift 2^" + std::to_string(shift2) + " too large for the finite surrogate");
    return out;
  }
  IntegerSet inter = IntegerSet::inter_of({quotient_set(a, b), quotient_set(a, shift2)});
  ReportStep& s3 = push_step(rpt, "pick least d in " + inter.str());
  std::optional<uint64_t> d = least_member(inter, 1, oracle.window_w);
  if (!d) {
    set_failure(rpt, "IntersectionEmpty",
                "A/2^b ∩ A/2^(b+2^a c) has no member in [1, " + std::to_string(oracle.window_w) +
                    "]");
    return out;
  }
  s3.chosen = std::to_string(*d);
  check_member(s3, inter, Nat(*d));

  if (b > 100000) {
    set_failure(rpt, "StarWitnessFailed", "witness exponent too large to expand");
    return out;
  }
  Nat x, y;
  mpz_mul_2exp(x.get_mpz_t(), Nat(c).get_mpz_t(), *av);
  mpz_mul_2exp(y.get_mpz_t(), Nat(*d).get_mpz_t(), b);
  ReportStep& s4 = push_step(rpt, "assemble x=2^a c, y=2^b d");
  s4.chosen = "x=" + x.get_str() + ", y=" + y.get_str();
  check_member(s4, a, x);
  check_member(s4, a, y);
  ExpValue big = ExpValue::prod({ExpValue::pow2(x), ExpValue::num(y)});
  check_member(s4, a, big);

  out.x = x;
  out.y = y;
  return out;
}

SequenceExtraction extract_exp_sequence(const IntegerSet& a, const LargenessOracle& oracle,
                                        uint64_t n, const SearchBudget& budget, uint64_t n_max) {
  oracle.validate();
  if (n < 1) fail(Errc::BadArgument, "stage count must be positive");
  if (n_max < 1) fail(Errc::BadArgument, "scan bound must be positive");
  SequenceExtraction out;
  ExtractionReport& rpt = out.report;
  IntegerSet ahat = a_hat_set(a, oracle);

  ReportStep& s1 = push_step(rpt, "pick least a_1 in " + ahat.str());
  std::optional<uint64_t> a1 = least_member(ahat, 1, n_max);
  if (!a1) {
    set_failure(rpt, "EmptyAHat",
                "no n <= " + std::to_string(n_max) + " with A/2^n large under " + oracle.str());
    return out;
  }
  s1.chosen = std::to_string(*a1);
  check_large(s1, oracle, quotient_set(a, *a1));

  std::vector<uint64_t> seq{*a1};         // a_1..a_{2k+1}, 1-based via seq[i-1]
  std::vector<uint64_t> cross_shifts;     // a_{2j+1} + 2^{a_i} a_{2j} for i < 2j
  for (uint64_t stage = 1; stage <= n; ++stage) {
    std::vector<IntegerSet> parts{ahat};
    for (uint64_t ai : seq) parts.push_back(quotient_set(a, ai));
    for (uint64_t sh : cross_shifts) parts.push_back(quotient_set(a, sh));
    IntegerSet a_stage = IntegerSet::inter_of(parts);

    uint64_t big_l = 0;
    for (uint64_t ai : seq) {
      if (ai > 62) {
        set_failure(rpt, "DaggerWitnessFailed",
                    "ladder bound 2^" + std::to_string(ai) + " exceeds the native range");
        return out;
      }
      big_l = std::max(big_l, uint64_t(1) << ai);
    }
    ReportStep& st = push_step(rpt, "stage " + std::to_string(stage) + ": ladder witness with L=" +
                                        std::to_string(big_l) + " in A_" + std::to_string(stage));
    bool parts_ok = true;
    for (const IntegerSet& p : parts) parts_ok = check_large(st, oracle, p) && parts_ok;
    if (!parts_ok || !check_large(st, oracle, a_stage)) {
      set_failure(rpt, "IntersectionEmpty",
                  "A_" + std::to_string(stage) + " is not large under " + oracle.str());
      return out;
    }
    uint64_t b, c;
    try {
      std::tie(b, c) = dagger_witness(a_stage, big_l, budget);
    } catch (const Error& e) {
      set_failure(rpt, "DaggerWitnessFailed", e.what());
      return out;
    }
    // the ladder is a_{2n+1}, a_{2n}, a_{2n+1} + l a_{2n}: b is the odd-index pick
    uint64_t a_even = c, a_odd = b;
    st.chosen = "(a_" + std::to_string(2 * stage) + ", a_" + std::to_string(2 * stage + 1) +
                ")=(" + std::to_string(a_even) + ", " + std::to_string(a_odd) + ")";
    check_member(st, a_stage, Nat(b));
    check_member(st, a_stage, Nat(c));
    bool ladder_ok = true;
    for (uint64_t l = 1; l <= big_l; ++l)
      ladder_ok = check_member(st, a_stage, Nat(b + l * c)) && ladder_ok;
    if (!ladder_ok) {
      set_failure(rpt, "DaggerWitnessFailed", "ladder recheck failed");
      return out;
    }

    for (size_t i = 1; i <= seq.size(); ++i) {  // i < 2*stage over the old prefix
      unsigned __int128 cs =
          (unsigned __int128)a_odd + ((unsigned __int128)1 << seq[i - 1]) * a_even;
      if (cs > 100000) {
        set_failure(rpt, "DaggerWitnessFailed",
                    "cross shift too large for the finite surrogate to evaluate");
        return out;
      }
      cross_shifts.push_back(uint64_t(cs));
    }
    seq.push_back(a_even);
    seq.push_back(a_odd);
  }

  // Final verification of the four condition families on a_1..a_{2n+1}.
  uint64_t len = seq.size();
  {
    ReportStep& st = push_step(rpt, "verify condition (1): a_i in A'");
    for (uint64_t i = 1; i <= len; ++i) check_member(st, ahat, Nat(seq[i - 1]));
    st.chosen = std::to_string(len) + " checks";
  }
  {
    ReportStep& st = push_step(rpt, "verify condition (2): a_(2j+1) + 2^(a_i) a_(2j) in A'");
    uint64_t count = 0;
    for (uint64_t j = 1; 2 * j < len; ++j)
      for (uint64_t i = 1; i < 2 * j; ++i) {
        Nat v = Nat(seq[2 * j]) + (Nat(1) << seq[i - 1]) * Nat(seq[2 * j - 1]);
        check_member(st, ahat, v);
        ++count;
      }
    st.chosen = std::to_string(count) + " checks";
  }
  {
    ReportStep& st = push_step(rpt, "verify condition (3): 2^(a_i) a_k in A except odd k=i+1");
    uint64_t count = 0;
    for (uint64_t i = 1; i <= len; ++i)
      for (uint64_t k = i + 1; k <= len; ++k) {
        if (k == i + 1 && k % 2 == 1) continue;
        ExpValue v = ExpValue::prod({ExpValue::pow2(Nat(seq[i - 1])), ExpValue::num(Nat(seq[k - 1]))});
        check_member(st, a, v);
        ++count;
      }
    st.chosen = std::to_string(count) + " checks";
  }
  {
    ReportStep& st = push_step(rpt, "verify condition (4): 2^(a_(2j+1)+2^(a_i) a_(2j)) a_k in A");
    uint64_t count = 0;
    for (uint64_t j = 1; 2 * j + 1 <= len; ++j)
      for (uint64_t i = 1; i < 2 * j; ++i)
        for (uint64_t k = 2 * j + 2; k <= len; ++k) {
          Nat shift = Nat(seq[2 * j]) + (Nat(1) << seq[i - 1]) * Nat(seq[2 * j - 1]);
          ExpValue v = ExpValue::prod({ExpValue::pow2(shift), ExpValue::num(Nat(seq[k - 1]))});
          check_member(st, a, v);
          ++count;
        }
    st.chosen = std::to_string(count) + " checks";
  }

  out.seq = seq;
  return out;
}

ExtractionReport verify_infinite_pattern(const std::vector<uint64_t>& a_seq, const IntegerSet& a,
                                         VerifyMode mode) {
  if (a_seq.size() < 4)
    fail(Errc::MalformedSequence, "need at least four sequence entries, got " +
                                      std::to_string(a_seq.size()));
  for (uint64_t v : a_seq)
    if (v < 1) fail(Errc::MalformedSequence, "sequence entries must be naturals");
  ExtractionReport rpt;
  uint64_t m = a_seq.size() / 2;
  std::vector<ExpValue> b;  // b'_n = 2^(a_(2n-1)) a_(2n)
  for (uint64_t n = 1; n <= m; ++n)
    b.push_back(
        ExpValue::prod({ExpValue::pow2(Nat(a_seq[2 * n - 2])), ExpValue::num(Nat(a_seq[2 * n - 1]))}));

  std::vector<Nat> b_nat;
  for (const auto& v : b) {
    auto nn = v.to_nat();
    if (!nn) fail(Errc::MalformedSequence, "sequence member too large to compose");
    b_nat.push_back(*nn);
  }

  if (mode == VerifyMode::Exp2) {
    ReportStep& s1 = push_step(rpt, "exp2 members b_n = 2^(a_(2n-1)) a_(2n)");
    std::string chosen;
    for (uint64_t n = 0; n < m; ++n) {
      chosen += (n ? ", " : "") + b[n].str();
      check_member(s1, a, b[n]);
    }
    s1.chosen = "b=(" + chosen + ")";
    ReportStep& s2 = push_step(rpt, "exp2 links 2^(b_n) b_(n+1)");
    std::string links;
    for (uint64_t n = 0; n + 1 < m; ++n) {
      ExpValue link = b[n + 1].shifted(b_nat[n]);
      links += (n ? ", " : "") + link.str();
      check_member(s2, a, link);
    }
    s2.chosen = "(" + links + ")";
  } else {
    ReportStep& s1 = push_step(rpt, "tower members t_n = 2^(b_n), exponents checked in A");
    std::string chosen;
    for (uint64_t n = 0; n < m; ++n) {
      ExpValue tower = ExpValue::pow2(b_nat[n]);
      chosen += (n ? ", " : "") + tower.str();
      check_member(s1, a, b[n]);
    }
    s1.chosen = "t=(" + chosen + ")";
    ReportStep& s2 = push_step(rpt, "tower links t_(n+1)^(t_n) = 2^(2^(b_n) b_(n+1))");
    std::string links;
    for (uint64_t n = 0; n + 1 < m; ++n) {
      ExpValue link = b[n + 1].shifted(b_nat[n]);  // exponent of the tower composition
      auto link_nat = link.to_nat();
      if (!link_nat) fail(Errc::MalformedSequence, "tower exponent too large to compose");
      ExpValue tower = ExpValue::pow2(*link_nat);
      links += (n ? ", " : "") + tower.str();
      check_member(s2, a, link);
    }
    s2.chosen = "(" + links + ")";
  }
  return rpt;
}

}  // namespace exppat
