// The nine acceptance checks, shared by the acceptance binary and the
// `verify-paper` subcommand.
#pragma once

#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "cyclonorm.hpp"
#include "goodbad.hpp"
#include "membership.hpp"
#include "numberfield.hpp"
#include "properties.hpp"
#include "search.hpp"

namespace circdet {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // hard time limit in seconds, 0 when there is none
};

struct AcceptanceOptions {
  unsigned workers = 0;
  std::uint64_t property_cases = kDefaultCases;
};

/// Primes p = 1 mod 15 below 5000 printed as good.
inline const std::vector<long>& listed_good_primes() {
  static const std::vector<long> v{31,   151,  181,  421,  601,  661,  691,  751,  811,  1051, 1171, 1231, 1291, 1321,
                                   1531, 1621, 1741, 1831, 1861, 2221, 2281, 2371, 2521, 2551, 2971, 3061, 3181, 3271,
                                   3301, 3361, 3391, 3511, 3691, 4051, 4111, 4201, 4231, 4561, 4621, 4831, 4951};
  return v;
}

/// ... and as bad.
inline const std::vector<long>& listed_bad_primes() {
  static const std::vector<long> v{61,   211,  241,  271,  331,  541,  571,  631,  991,  1021, 1201, 1381, 1471,
                                   1801, 1951, 2011, 2131, 2161, 2251, 2311, 2341, 2671, 2791, 2851, 3001, 3121,
                                   3331, 3541, 3571, 3631, 3931, 4021, 4261, 4441, 4591, 4651, 4801, 4861};
  return v;
}

namespace detail {

inline std::string join(const std::vector<long>& v) {
  std::string s;
  for (long x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
  return s.empty() ? "none" : s;
}

// Collects the first few failures and a count.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_++ < 5) text_ += (text_.empty() ? "" : "; ") + what;
  }
  bool empty() const { return count_ == 0; }
  std::string summary(const std::string& ok_text) const {
    return count_ ? std::to_string(count_) + " failure(s): " + text_ : ok_text;
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

}  // namespace detail

inline CriterionResult criterion_fixed_witnesses() {
  CriterionResult r{1, "fixed witness identities", false, "", 0, 1.0};
  detail::Failures f;
  struct Case {
    long n;
    const char* poly;
    long want;
  };
  const Case cases[] = {{15, "-x", -1},
                        {15, "1 - x + x^14 + x^13 + x^12 + x^11 + x^10 + x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1", 225},
                        {35, "1 + x^3 + x^5 + x^7 + x^10", 125},
                        {55, "1 + x^3 + x^5 + x^7 + x^10", 125},
                        {35, "1 + x + x^2 + x^3 + x^4 + x^5 + x^6 + x^7 + x^8 - x^5 - x^3", 343},
                        {55, "x^14 + 1 + x^3 + x^4 + x^5 + x^6 + x^7 + x^8 + x^9 + x^10 + x^11", 1331}};
  for (const auto& c : cases) {
    BigInt got = norm_profile(parse_poly(c.poly), c.n).total;
    if (got != c.want) f.add("M_" + std::to_string(c.n) + "(" + c.poly + ") = " + to_string(got));
  }
  for (const auto& e : witness_registry()) {
    try {
      fixed_witness(e.name);
    } catch (const Error& ex) {
      f.add(e.name + ": " + ex.what());
    }
  }
  r.passed = f.empty();
  r.detail = f.summary("6 identities and " + std::to_string(witness_registry().size()) + " registry entries exact");
  return r;
}

inline CriterionResult criterion_families() {
  CriterionResult r{2, "p^3 m and 3-power families", false, "", 0, 30.0};
  detail::Failures f;
  std::size_t checked = 0;
  for (long p : primes_up_to(49)) {
    if (p == 2 || p == 3) continue;
    const long n = 3 * p;
    for (long m = -10; m <= 10; ++m) {
      if (m == 0) continue;
      auto expect = [&](const std::function<WitnessCertificate()>& make, const BigInt& want, const std::string& what) {
        ++checked;
        try {
          WitnessCertificate c = make();
          if (c.n != n || c.claimed != want || norm_profile(c.poly, n).total != want) f.add(what);
        } catch (const Error& ex) {
          f.add(what + ": " + ex.what());
        }
      };
      const std::string tag = "(p=" + std::to_string(p) + ",m=" + std::to_string(m) + ")";
      if (m % 3 != 0) expect([&] { return witness_p3m(p, m); }, pow(BigInt(p), 3) * m, "p3m" + tag);
      if (m % p != 0) expect([&] { return witness_3power(p, m, ThreePowerVariant::F3); }, BigInt(81) * m, "F3" + tag);
      if (gcd(m, n) == 1) expect([&] { return witness_3power(p, m, ThreePowerVariant::F4); }, BigInt(27) * m, "F4" + tag);
    }
  }
  r.passed = f.empty();
  r.detail = f.summary(std::to_string(checked) + " certificates exact");
  return r;
}

inline CriterionResult criterion_3sq_5sq() {
  CriterionResult r{3, "9p and 25p for p = 7, 11, 13 mod 15", false, "", 0, 120.0};
  detail::Failures f;
  std::size_t primes = 0;
  for (long p : primes_up_to(1000)) {
    const long m = p % 15;
    if (m != 7 && m != 11 && m != 13) continue;
    ++primes;
    try {
      auto [a, b] = witness_3sq_5sq(p);
      if (a.claimed != 9 * p || norm_profile(a.poly, 15).total != 9 * p) f.add("9*" + std::to_string(p));
      if (b.claimed != 25 * p || norm_profile(b.poly, 15).total != 25 * p) f.add("25*" + std::to_string(p));
    } catch (const Error& ex) {
      f.add(std::to_string(p) + ": " + ex.what());
    }
  }
  r.passed = f.empty();
  r.detail = f.summary(std::to_string(primes) + " primes, " + std::to_string(2 * primes) + " certificates exact");
  return r;
}

inline CriterionResult criterion_good_bad_lists() {
  CriterionResult r{4, "good/bad lists for p <= 5000", false, "", 0, 0};
  std::vector<long> good, bad;
  for (long p : primes_up_to(5000))
    if (p % 15 == 1) (classify_prime(p) == Tag::good ? good : bad).push_back(p);
  const std::set<long> lg(listed_good_primes().begin(), listed_good_primes().end());
  const std::set<long> lb(listed_bad_primes().begin(), listed_bad_primes().end());
  std::vector<long> good_unlisted, bad_unlisted, wrong_tag, missing;
  for (long p : good) {
    if (lb.count(p)) wrong_tag.push_back(p);
    else if (!lg.count(p)) good_unlisted.push_back(p);
  }
  for (long p : bad) {
    if (lg.count(p)) wrong_tag.push_back(p);
    else if (!lb.count(p)) bad_unlisted.push_back(p);
  }
  std::set<long> all(good.begin(), good.end());
  all.insert(bad.begin(), bad.end());
  for (long p : lg) if (!all.count(p)) missing.push_back(p);
  for (long p : lb) if (!all.count(p)) missing.push_back(p);
  r.passed = good_unlisted.empty() && bad_unlisted.empty() && wrong_tag.empty() && missing.empty() &&
             good.size() == lg.size() && bad.size() == lb.size();
  std::ostringstream d;
  d << "computed " << good.size() << " good / " << bad.size() << " bad, listed " << lg.size() << " / " << lb.size()
    << "; wrong tag: " << detail::join(wrong_tag) << "; good not listed: " << detail::join(good_unlisted)
    << "; bad not listed: " << detail::join(bad_unlisted) << "; listed but not prime 1 mod 15: " << detail::join(missing);
  r.detail = d.str();
  return r;
}

inline CriterionResult criterion_good_witnesses() {
  CriterionResult r{5, "9p and 25p from good forms", false, "", 0, 0};
  detail::Failures f;
  for (long p : listed_good_primes()) {
    try {
      Classification c = classify_element(find_norm_element(p));
      if (c.tag != Tag::good) {
        f.add(std::to_string(p) + " classified bad");
        continue;
      }
      WitnessCertificate a = witness_good_form(c, GoodFormTarget::three);
      WitnessCertificate b = witness_good_form(c, GoodFormTarget::five);
      if (a.claimed != 9 * p || norm_profile(a.poly, 15).total != 9 * p) f.add("9*" + std::to_string(p));
      if (b.claimed != 25 * p || norm_profile(b.poly, 15).total != 25 * p) f.add("25*" + std::to_string(p));
    } catch (const Error& ex) {
      f.add(std::to_string(p) + ": " + ex.what());
    }
  }
  r.passed = f.empty();
  r.detail = f.summary(std::to_string(listed_good_primes().size()) + " primes, 9p and 25p certificates exact");
  return r;
}

inline CriterionResult criterion_prime_powers() {
  CriterionResult r{6, "prime-power tags", false, "", 0, 0};
  detail::Failures f;
  std::size_t by_rule = 0, confirmed = 0;
  for (long p : primes_up_to(1000)) {
    if (p == 3 || p == 5) continue;
    long e = 0;
    Tag want = Tag::good;
    if (p % 5 == 2 || p % 5 == 3) e = 4;
    else if (p % 15 == 4) e = 2;
    else if (p % 15 == 14) e = 2, want = Tag::bad;
    else continue;
    ++by_rule;
    PrimePowerTag t = prime_power_tag(p);
    if (t.exponent != e || t.tag != want) f.add(std::to_string(p) + "^" + std::to_string(t.exponent) + " " + to_string(t.tag));
    if (p <= 100) {
      ++confirmed;
      Tag c = prime_power_tag_computed(p);
      if (c != want) f.add(std::to_string(p) + " computed " + to_string(c));
    }
  }
  r.passed = f.empty();
  r.detail = f.summary(std::to_string(by_rule) + " primes match, " + std::to_string(confirmed) + " confirmed by classifying a norm p^e element");
  return r;
}

inline CriterionResult criterion_search(unsigned workers) {
  CriterionResult r{7, "exhaustive search n = 15, b = 1", false, "", 0, 0};
  ConsistencyChecker chk(15);
  EnumerateOptions opt;
  opt.workers = workers;
  EnumerateSummary s = enumerate_values(15, 1, [&](const SearchRecord& rec) { chk.add(rec); }, opt);
  ConsistencyReport rep = chk.report();
  r.passed = !s.partial && rep.ok() && rep.membership_checked;
  std::ostringstream d;
  d << s.visited << " vectors, " << s.emitted << " dihedral classes, " << rep.distinct_values << " distinct values; "
    << rep.divisibility_violations.size() << " divisibility violations, " << rep.rejected.size() << " rejected, "
    << rep.forbidden_hits.size() << " forbidden values, " << rep.undecided.size() << " undecided";
  r.detail = d.str();
  return r;
}

inline CriterionResult criterion_properties(std::uint64_t cases) {
  CriterionResult r{8, "property suites", false, "", 0, 0};
  detail::Failures f;
  std::size_t total = 0;
  for (const auto& p : run_all_properties(kDefaultSeed, cases)) {
    total += p.cases;
    if (!p.ok()) f.add(p.name + " (" + std::to_string(p.failures) + "/" + std::to_string(p.cases) + "): " + p.first_failure);
    else if (p.cases < 10000) f.add(p.name + ": only " + std::to_string(p.cases) + " cases");
  }
  r.passed = f.empty();
  r.detail = f.summary("7 suites, " + std::to_string(total) + " cases");
  return r;
}

inline CriterionResult criterion_unit_tables() {
  CriterionResult r{9, "unit tables", false, "", 0, 1.0};
  detail::Failures f;
  std::size_t lines = 0;
  for (long n : tabulated_conductors()) {
    UnitTableReport rep = verify_unit_table(n);
    lines += rep.lines.size();
    if (!rep.ok) f.add("n=" + std::to_string(n));
  }
  r.passed = f.empty();
  r.detail = f.summary(std::to_string(tabulated_conductors().size()) + " conductors, " + std::to_string(lines) + " generators");
  return r;
}

inline std::vector<std::function<CriterionResult()>> acceptance_suite(const AcceptanceOptions& opt = {}) {
  return {criterion_fixed_witnesses,
          criterion_families,
          criterion_3sq_5sq,
          criterion_good_bad_lists,
          criterion_good_witnesses,
          criterion_prime_powers,
          [opt] { return criterion_search(opt.workers); },
          [opt] { return criterion_properties(opt.property_cases); },
          criterion_unit_tables};
}

/// Runs one criterion, times it, and applies its time limit. Exceptions
/// count as failures.
inline CriterionResult run_criterion(const std::function<CriterionResult()>& c, int id) {
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c();
  } catch (const std::exception& ex) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.budget > 0 && r.seconds > r.budget) {
    r.passed = false;
    r.detail += "; over the " + std::to_string(static_cast<long>(r.budget)) + " s limit";
  }
  return r;
}

}  // namespace circdet
