// Brute-force enumeration of M_n over coefficient boxes, and the checks that
// reconcile its output with the membership rules.
#pragma once

#include <algorithm>
#include <atomic>
#include <complex>
#include <condition_variable>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "cyclonorm.hpp"
#include "goodbad.hpp"
#include "membership.hpp"

namespace circdet {

struct SearchRecord {
  long n = 1;
  std::vector<long> coeffs;
  BigInt value;
  NormProfile profile;
};

/// CIRCDET_WORKERS if set and positive, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* s = std::getenv("CIRCDET_WORKERS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == 0 && v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

/// True when v is the lexicographically smallest (v[0] most significant) of
/// its images under the rotations and reversals of Z/n.
inline bool is_dihedral_canonical(const long* v, long n) {
  for (long r = 0; r < n; ++r) {
    for (int refl = 0; refl < 2; ++refl) {
      if (r == 0 && refl == 0) continue;
      for (long i = 0; i < n; ++i) {
        long idx = refl ? ((r - i) % n + n) % n : (i + r) % n;
        long w = v[idx];
        if (w < v[i]) return false;
        if (w > v[i]) break;
      }
    }
  }
  return true;
}

inline std::vector<long> dihedral_canonical(const std::vector<long>& v) {
  const long n = static_cast<long>(v.size());
  std::vector<long> best = v, img(v.size());
  for (long r = 0; r < n; ++r)
    for (int refl = 0; refl < 2; ++refl) {
      for (long i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(refl ? ((r - i) % n + n) % n : (i + r) % n)];
      if (img < best) best = img;
    }
  return best;
}

struct EnumerateOptions {
  unsigned workers = 0;               // 0: default_workers()
  double budget = 2.0e9;              // maximum number of raw vectors visited
};

struct EnumerateSummary {
  long n = 1;
  long bound = 0;
  std::uint64_t visited = 0;   // raw vectors inspected
  std::uint64_t emitted = 0;   // canonical vectors
  std::uint64_t shards = 0, shards_done = 0;
  bool partial = false;        // budget stopped the run early
  std::set<BigInt> values;     // distinct values emitted
};

/// Visits [-b, b]^n, emits one record per dihedral class in increasing
/// lexicographic order of the canonical vector. Shards on the first three
/// coefficients are processed in parallel and handed to `sink` in order.
inline EnumerateSummary enumerate_values(long n, long b, const std::function<void(const SearchRecord&)>& sink,
                                         EnumerateOptions opt = {}) {
  if (n < 1 || b < 0) throw DomainError("enumerate_values needs n >= 1 and b >= 0");
  const long base = 2 * b + 1;
  const long prefix = std::min<long>(3, n);
  std::uint64_t shards = 1, per_shard = 1;
  for (long i = 0; i < prefix; ++i) shards *= static_cast<std::uint64_t>(base);
  double total = 1;
  for (long i = 0; i < n; ++i) total *= static_cast<double>(base);
  for (long i = prefix; i < n; ++i) per_shard *= static_cast<std::uint64_t>(base);

  EnumerateSummary sum;
  sum.n = n;
  sum.bound = b;
  sum.shards = shards;
  std::uint64_t allowed = shards;
  if (total > opt.budget) {
    allowed = static_cast<std::uint64_t>(opt.budget / static_cast<double>(per_shard));
    sum.partial = true;
  }
  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers ? opt.workers : default_workers(), static_cast<unsigned>(std::max<std::uint64_t>(allowed, 1))));

  std::vector<std::optional<std::vector<SearchRecord>>> slots(allowed);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;

  auto work = [&]() {
    try {
      SmallNormEvaluator ev(n);
      std::vector<long> a(static_cast<std::size_t>(n));
      std::vector<BigInt> norms;
      for (;;) {
        std::uint64_t s = next.fetch_add(1);
        if (s >= allowed) return;
        std::vector<SearchRecord> out;
        std::uint64_t code = s;
        for (long i = prefix - 1; i >= 0; --i) {
          a[static_cast<std::size_t>(i)] = static_cast<long>(code % static_cast<std::uint64_t>(base)) - b;
          code /= static_cast<std::uint64_t>(base);
        }
        for (long i = prefix; i < n; ++i) a[static_cast<std::size_t>(i)] = -b;
        for (;;) {
          if (is_dihedral_canonical(a.data(), n)) {
            ev.evaluate(a.data(), norms);
            SearchRecord r;
            r.n = n;
            r.coeffs = a;
            r.profile.n = n;
            r.profile.total = 1;
            const auto& ds = ev.divisors_list();
            for (std::size_t k = 0; k < ds.size(); ++k) {
              r.profile.total *= norms[k];
              r.profile.norms[ds[k]] = norms[k];
            }
            r.value = r.profile.total;
            out.push_back(std::move(r));
          }
          long i = n - 1;
          while (i >= prefix && a[static_cast<std::size_t>(i)] == b) a[static_cast<std::size_t>(i--)] = -b;
          if (i < prefix) break;
          ++a[static_cast<std::size_t>(i)];
        }
        std::lock_guard<std::mutex> lock(mu);
        slots[s] = std::move(out);
        cv.notify_all();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      next = allowed;
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::uint64_t s = 0; s < allowed; ++s) {
    std::vector<SearchRecord> recs;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv.wait(lock, [&] { return slots[s].has_value() || failure; });
      if (failure) break;
      recs = std::move(*slots[s]);
      slots[s].reset();
    }
    for (const auto& r : recs) {
      sink(r);
      sum.values.insert(r.value);
      ++sum.emitted;
    }
    sum.visited += per_shard;
    ++sum.shards_done;
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return sum;
}

// ---------------------------------------------------------------------------
// Consistency
// ---------------------------------------------------------------------------

struct ConsistencyReport {
  long n = 1;
  std::uint64_t records = 0;
  std::uint64_t distinct_values = 0;
  std::vector<BigInt> divisibility_violations;
  std::vector<BigInt> rejected;       // declared non-members by the decision procedure
  std::vector<BigInt> undecided;      // "unknown" verdicts
  std::vector<BigInt> forbidden_hits; // |v| in {3, 5, 9, 15, 25, 45, 75} (n = 15)
  bool membership_checked = false;

  bool ok() const { return divisibility_violations.empty() && rejected.empty() && forbidden_hits.empty(); }
};

/// Absolute values shown not to be 15 x 15 circulant determinants.
inline const std::set<long>& forbidden_s15() {
  static const std::set<long> s{3, 5, 9, 15, 25, 45, 75};
  return s;
}

/// Streaming form of consistency_report; each distinct value is decided once.
class ConsistencyChecker {
 public:
  explicit ConsistencyChecker(long n) { rep_.n = n; }

  void add(const SearchRecord& r) {
    if (r.n != rep_.n) throw DomainError("record modulus mismatch");
    ++rep_.records;
    if (!seen_.insert(r.value).second) return;
    const BigInt& v = r.value;
    if (!divisibility_ok(rep_.n, v)) rep_.divisibility_violations.push_back(v);
    MembershipOptions opt;
    opt.synthesize = false;
    std::optional<MembershipVerdict> d;
    const long n = rep_.n;
    if (n == 15) {
      d = decide_s15(v, opt);
      const BigInt av = abs(v);
      if (av.fits_slong_p() && forbidden_s15().count(av.get_si())) rep_.forbidden_hits.push_back(v);
    } else if (n >= 3 && is_prime(n)) {
      d = decide_sp(v, n, false, opt);
    } else if (n >= 6 && n % 2 == 0 && is_prime(n / 2) && n / 2 >= 3) {
      d = decide_sp(v, n / 2, true, opt);
    }
    if (d) {
      rep_.membership_checked = true;
      if (d->status == Status::non_member) rep_.rejected.push_back(v);
      if (d->status == Status::unknown) rep_.undecided.push_back(v);
    }
  }

  ConsistencyReport report() const {
    ConsistencyReport r = rep_;
    r.distinct_values = seen_.size();
    return r;
  }

 private:
  ConsistencyReport rep_;
  std::set<BigInt> seen_;
};

inline ConsistencyReport consistency_report(const std::vector<SearchRecord>& records, long n) {
  ConsistencyChecker c(n);
  for (const auto& r : records) c.add(r);
  return c.report();
}

// ---------------------------------------------------------------------------
// Bounded search over first forms
// ---------------------------------------------------------------------------

/// Looks for (x^5 - 1) + sign x^j Phi_3 B + (x - 1) Phi_3 Phi_5 g with
/// N_15 = p, deg g <= 6 and |g_i| <= bound. Order: g by sup-norm shell, then
/// lexicographic; then sign (+, -), j = 0..14, B = 1, x - 1.
inline std::optional<CanonicalForm> bounded_form_search(long p, long bound) {
  require_prime(p, "bounded_form_search");
  if (p % 15 != 1) throw DomainError("bounded_form_search needs p = 1 mod 15");
  if (bound < 0) throw DomainError("bound must be nonnegative");
  using cplx = std::complex<long double>;
  const long ks[4] = {1, 2, 4, 7};
  const long double target = std::log(static_cast<long double>(p));

  struct Core {
    CanonicalForm form;
    cplx e[4];
  };
  std::vector<Core> cores;
  for (int sign : {1, -1})
    for (int j = 0; j < 15; ++j)
      for (Tag t : {Tag::good, Tag::bad}) {
        Core c;
        c.form.sign = sign;
        c.form.shift = j;
        c.form.b_type = t;
        CycloElement ce = reduce_mod_cyclotomic(c.form.core(), 15);
        for (int k = 0; k < 4; ++k) c.e[k] = embed(ce, ks[k]);
        cores.push_back(c);
      }
  cplx basis[7][4];
  const IntPoly m = detail::xm1() * detail::phi3() * detail::phi5();
  for (int i = 0; i < 7; ++i) {
    CycloElement be = reduce_mod_cyclotomic(m.shifted(static_cast<std::size_t>(i)), 15);
    for (int k = 0; k < 4; ++k) basis[i][k] = embed(be, ks[k]);
  }
  std::vector<long> g(7);
  for (long s = 0; s <= bound; ++s) {
    std::fill(g.begin(), g.end(), -s);
    do {
      long mx = 0;
      for (long v : g) mx = std::max(mx, std::labs(v));
      if (mx != s) continue;
      cplx ge[4] = {};
      for (int i = 0; i < 7; ++i)
        if (g[static_cast<std::size_t>(i)])
          for (int k = 0; k < 4; ++k) ge[k] += static_cast<long double>(g[static_cast<std::size_t>(i)]) * basis[i][k];
      for (const Core& c : cores) {
        long double lg = 0;
        for (int k = 0; k < 4; ++k) lg += 2 * std::log(std::abs(c.e[k] + ge[k]));
        if (std::fabs(lg - target) > 1e-6L) continue;
        CanonicalForm f = c.form;
        f.cofactor = IntPoly(std::vector<BigInt>(g.begin(), g.end()));
        if (norm_d(f.reconstruct(), 15) == p) return f;
      }
    } while (detail::shell_next(g, s));
  }
  return std::nullopt;
}

}  // namespace circdet
