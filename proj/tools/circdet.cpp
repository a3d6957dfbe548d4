// circdet: command-line front end. Exit status 0 on success, 1 on a domain
// error (bad mathematical input), 2 on a usage error.
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circdet/circdet.hpp"

using namespace circdet;

namespace {

// Bad flag values that CLI11 cannot see (polynomial text, big integers).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IntPoly poly_flag(const std::string& text, const char* flag) {
  try {
    return parse_poly(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

BigInt int_flag(const std::string& text, const char* flag) {
  try {
    return parse_bigint(text);
  } catch (const DomainError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

bool g_json = false;

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

void print_profile(const NormProfile& p) {
  for (const auto& [d, v] : p.norms) std::cout << "  N_" << d << " = " << to_string(v) << "\n";
}

void print_certificate(const WitnessCertificate& c) {
  std::cout << "M_" << c.n << " = " << to_string(c.claimed) << "\n";
  std::cout << "F = " << render_poly(c.poly) << "\n";
  std::cout << "label: " << c.label << "\n";
  print_profile(c.profile);
}

void print_form(const char* title, const CanonicalForm& f) {
  std::cout << title << ": " << render_poly(f.reconstruct()) << "\n";
  std::cout << "  sign " << (f.sign > 0 ? "+" : "-") << ", shift " << f.shift << ", B = " << render_poly(f.b_poly())
            << ", g = " << render_poly(f.cofactor) << "\n";
  std::cout << "  unit: (-x)^" << f.unit_ledger.torsion << " (x-1)^" << f.unit_ledger.e[0] << " (x+1)^" << f.unit_ledger.e[1]
            << " (x^3+1)^" << f.unit_ledger.e[2] << "\n";
}

unsigned workers_or_default(unsigned w) { return w ? w : default_workers(); }

// --- eval / norms / cyclotomic --------------------------------------------

int cmd_eval(long n, const std::string& poly) {
  IntPoly f = poly_flag(poly, "--poly");
  NormProfile p = norm_profile(f, n);
  if (g_json) {
    emit(Json{{"n", n}, {"poly", render_poly(f)}, {"value", to_string(p.total)}, {"profile", to_json(p)}});
    return 0;
  }
  std::cout << "M_" << n << " = " << to_string(p.total) << "\n";
  print_profile(p);
  return 0;
}

int cmd_norms(const std::string& poly, std::vector<long> ds, long n) {
  IntPoly f = poly_flag(poly, "--poly");
  if (ds.empty()) {
    if (n < 1) throw UsageError("norms: give --d or --n");
    ds = divisors(n);
  }
  Json arr = Json::array();
  for (long d : ds) {
    UnitCheck u = unit_check(f, d);
    if (g_json)
      arr.push_back({{"d", d}, {"norm", to_string(u.norm)}, {"is_unit", u.is_unit}, {"is_reciprocal", u.is_reciprocal},
                     {"is_skew_reciprocal", u.is_skew_reciprocal}});
    else
      std::cout << "N_" << d << " = " << to_string(u.norm) << (u.is_unit ? "  (unit)" : "") << "\n";
  }
  if (g_json) emit(Json{{"poly", render_poly(f)}, {"norms", arr}});
  return 0;
}

int cmd_cyclotomic(long d, long with) {
  IntPoly c = cyclotomic(d);
  std::optional<BigInt> res;
  if (with > 0) res = resultant(c, cyclotomic(with));
  if (g_json) {
    Json j{{"d", d}, {"poly", render_poly(c)}, {"coeffs", coeffs_json(c)}};
    if (res) {
      j["with"] = with;
      j["resultant"] = to_string(*res);
    }
    emit(j);
    return 0;
  }
  std::cout << "Phi_" << d << " = " << render_poly(c) << "\n";
  if (res) std::cout << "Res(Phi_" << d << ", Phi_" << with << ") = " << to_string(*res) << "\n";
  return 0;
}

// --- witness -----------------------------------------------------------------

struct WitnessArgs {
  long n = 15;
  std::string value;
  std::string family;
  long p = 0, m = 0;
  std::string name, poly, k, lambda;
};

std::optional<MembershipVerdict> decide(long n, const BigInt& v, const MembershipOptions& opt) {
  if (n == 15) return decide_s15(v, opt);
  if (n >= 3 && is_prime(n)) return decide_sp(v, n, false, opt);
  if (n >= 6 && n % 2 == 0 && is_prime(n / 2)) return decide_sp(v, n / 2, true, opt);
  return std::nullopt;
}

int cmd_witness(const WitnessArgs& a) {
  std::vector<WitnessCertificate> out;
  if (!a.value.empty()) {
    if (!a.family.empty()) throw UsageError("witness: --value and --family are exclusive");
    BigInt v = int_flag(a.value, "--value");
    auto d = decide(a.n, v, {});
    if (!d) throw DomainError("membership is decided only for n = 15, p and 2p");
    if (!d->member()) {
      if (g_json)
        emit(Json{{"n", a.n}, {"value", to_string(v)}, {"found", false}, {"verdict", to_json(*d)}});
      else
        std::cout << "no witness: " << to_string(v) << " is " << to_string(d->status) << " (" << to_string(d->reason) << ")\n";
      return d->status == Status::unknown ? 1 : 0;
    }
    out.push_back(*d->witness);
  } else if (a.family == "p3m") {
    out.push_back(witness_p3m(a.p, a.m));
  } else if (a.family == "f3" || a.family == "f4") {
    out.push_back(witness_3power(a.p, a.m, a.family == "f3" ? ThreePowerVariant::F3 : ThreePowerVariant::F4));
  } else if (a.family == "3sq5sq") {
    auto pr = witness_3sq_5sq(a.p);
    out = {pr.first, pr.second};
  } else if (a.family == "good-form") {
    if (a.p % 15 != 1 || !is_prime(a.p)) throw DomainError("good-form needs a prime p = 1 mod 15");
    Classification c = classify_element(find_norm_element(a.p));
    if (c.tag != Tag::good) throw DomainError(std::to_string(a.p) + " is bad; no good form exists");
    out = {witness_good_form(c, GoodFormTarget::three), witness_good_form(c, GoodFormTarget::five)};
  } else if (a.family == "fixed") {
    if (a.name.empty()) {
      for (const auto& nm : registry_names()) out.push_back(fixed_witness(nm));
    } else {
      out.push_back(fixed_witness(a.name));
    }
  } else if (a.family == "shift") {
    if (a.poly.empty() || a.k.empty() || a.lambda.empty()) throw UsageError("shift needs --poly, --k and --lambda");
    out.push_back(shift_construction(poly_flag(a.poly, "--poly"), a.n, int_flag(a.k, "--k"), int_flag(a.lambda, "--lambda")));
  } else if (a.family.empty()) {
    throw UsageError("witness: give --value or --family");
  } else {
    throw UsageError("--family: unknown family '" + a.family + "'");
  }
  if (g_json) {
    Json arr = Json::array();
    for (const auto& c : out) arr.push_back(to_json(c));
    emit(Json{{"found", true}, {"certificates", arr}});
    return 0;
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i) std::cout << "\n";
    print_certificate(out[i]);
  }
  return 0;
}

// --- classify / split-prime ----------------------------------------------------

Json prime_json(long p) {
  if (p % 15 == 1) {
    Classification c = classify_element(find_norm_element(p));
    if (c.tag != classify_prime(p)) throw InternalError("classification differs between norm elements");
    return Json{{"p", p}, {"exponent", 1}, {"tag", to_string(c.tag)}, {"computed", true}, {"classification", to_json(c)}};
  }
  Json j = to_json(prime_power_tag(p));
  j["classification"] = nullptr;
  return j;
}

int cmd_classify(long prime, long up_to, const std::string& poly, unsigned workers) {
  const int given = (prime > 0) + (up_to > 0) + !poly.empty();
  if (given != 1) throw UsageError("classify: give exactly one of --prime, --primes-up-to, --poly");
  if (!poly.empty()) {
    Classification c = classify_poly(poly_flag(poly, "--poly"));
    if (g_json) {
      emit(to_json(c));
      return 0;
    }
    std::cout << to_string(c.tag) << "\n";
    print_form("first form", c.first);
    print_form("second form", c.second);
    return 0;
  }
  if (prime > 0) {
    if (!is_prime(prime)) throw DomainError(std::to_string(prime) + " is not prime");
    if (prime == 3 || prime == 5) throw DomainError("3 and 5 ramify; no tag");
    Json j = prime_json(prime);
    if (g_json) {
      emit(j);
      return 0;
    }
    const long e = j["exponent"].get<long>();
    if (e == 1)
      std::cout << j["tag"].get<std::string>() << "\n";
    else
      std::cout << prime << "^" << e << " is " << j["tag"].get<std::string>() << "\n";
    return 0;
  }
  std::vector<long> ps;
  for (long p : primes_up_to(up_to))
    if (p % 15 == 1) ps.push_back(p);
  std::vector<Tag> tags(ps.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex mu;
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= ps.size()) return;
      try {
        tags[i] = classify_prime(ps[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers_or_default(workers); ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  if (g_json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < ps.size(); ++i) arr.push_back({{"p", ps[i]}, {"tag", to_string(tags[i])}});
    emit(Json{{"up_to", up_to}, {"primes", arr}});
    return 0;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) std::cout << ps[i] << " " << to_string(tags[i]) << "\n";
  return 0;
}

int cmd_split(long p) {
  SplittingData sd = splitting_data(p);
  Json j{{"splitting", to_json(sd)}};
  j["eisenstein"] = nullptr;
  j["canonical_mod15"] = nullptr;
  j["norm5"] = nullptr;
  if (p % 3 == 1) {
    auto [al, be] = eisenstein_rep(p);
    j["eisenstein"] = {{"alpha", al}, {"beta", be}};
    j["canonical_mod15"] = to_json(canonical_rep_mod15(p));
  }
  if (p % 15 == 11) {
    // 3 +- (x - 1) + 3 (x - 1) g is +-(x - 1) mod 3, so its norm is 2 mod 3
    Norm5Rep r = rep_norm5(p);
    j["norm5"] = {{"sign", r.sign}, {"g", render_poly(r.g)}, {"g2", render_poly(r.g2)},
                  {"element", render_poly(r.element())}, {"element5p", render_poly(r.element5p())}};
  }
  if (g_json) {
    emit(j);
    return 0;
  }
  std::cout << p << " = product of " << sd.count << " primes of norm " << p << "^" << sd.f << " in Z[w_15]\n";
  if (!j["eisenstein"].is_null()) {
    std::cout << "eisenstein: " << p << " = a^2 - ab + b^2 with (a, b) = (" << j["eisenstein"]["alpha"] << ", "
              << j["eisenstein"]["beta"] << ")\n";
    std::cout << "mod 15 first: " << j["canonical_mod15"]["first"]["poly"].get<std::string>() << "\n";
    if (!j["canonical_mod15"]["second"].is_null())
      std::cout << "mod 15 second: " << j["canonical_mod15"]["second"]["poly"].get<std::string>() << "\n";
  }
  if (!j["norm5"].is_null())
    std::cout << "N_5(" << j["norm5"]["element"].get<std::string>() << ") = " << p << "\n";
  return 0;
}

// --- member ------------------------------------------------------------------

int cmd_member(long n, const std::string& value, bool no_witness, long trial_bound) {
  BigInt v = int_flag(value, "--value");
  MembershipOptions opt;
  opt.synthesize = !no_witness;
  opt.trial_bound = trial_bound;
  auto d = decide(n, v, opt);
  if (!d) throw DomainError("membership is decided only for n = 15, p and 2p");
  if (g_json) {
    emit(to_json(*d));
    return 0;
  }
  std::cout << to_string(d->status) << " (" << to_string(d->reason) << ")";
  if (d->prime) std::cout << " via p = " << *d->prime;
  std::cout << "\n";
  if (!d->note.empty()) std::cout << d->note << "\n";
  if (d->witness) std::cout << "witness: " << render_poly(d->witness->poly) << "\n";
  return 0;
}

// --- search ------------------------------------------------------------------

int cmd_search(long n, long bound, const std::string& out_path, unsigned workers, double budget, bool check, long form_prime) {
  if (form_prime > 0) {
    auto f = bounded_form_search(form_prime, bound);
    if (g_json) {
      Json j{{"p", form_prime}, {"bound", bound}};
      j["form"] = f ? to_json(*f) : Json(nullptr);
      j["tag"] = f ? Json(to_string(f->b_type)) : Json(nullptr);
      emit(j);
    } else if (f) {
      std::cout << to_string(f->b_type) << "\n";
      print_form("form", *f);
    } else {
      std::cout << "no form with |g_i| <= " << bound << "\n";
    }
    return 0;
  }
  std::ostream* os = &std::cout;
  std::unique_ptr<std::ofstream> file;
  if (out_path != "-") {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) throw DomainError("cannot open " + out_path);
    os = file.get();
  }
  ConsistencyChecker chk(n);
  EnumerateOptions opt;
  opt.workers = workers_or_default(workers);
  opt.budget = budget;
  EnumerateSummary s = enumerate_values(n, bound, [&](const SearchRecord& r) {
    *os << to_json(r).dump() << "\n";
    if (check) chk.add(r);
  }, opt);
  os->flush();
  Json sum{{"n", n}, {"bound", bound}, {"visited", s.visited}, {"emitted", s.emitted}, {"distinct_values", s.values.size()},
           {"shards", s.shards}, {"shards_done", s.shards_done}, {"partial", s.partial}};
  sum["consistency"] = check ? to_json(chk.report()) : Json(nullptr);
  // records own stdout; the summary goes to stderr
  if (g_json) {
    std::cerr << sum.dump() << "\n";
  } else {
    std::cerr << "visited " << s.visited << ", emitted " << s.emitted << ", distinct values " << s.values.size()
              << (s.partial ? " (partial: budget reached)" : "") << "\n";
    if (check) {
      ConsistencyReport r = chk.report();
      std::cerr << "consistency: " << (r.ok() ? "ok" : "FAILED") << " (" << r.divisibility_violations.size()
                << " divisibility violations, " << r.rejected.size() << " rejected, " << r.forbidden_hits.size()
                << " forbidden, " << r.undecided.size() << " undecided)\n";
    }
  }
  if (check && !chk.report().ok()) return 1;
  return 0;
}

// --- verify ------------------------------------------------------------------

int cmd_verify_units(long n) {
  std::vector<long> ns = n > 0 ? std::vector<long>{n} : tabulated_conductors();
  Json arr = Json::array();
  bool all = true;
  for (long c : ns) {
    UnitTableReport r = verify_unit_table(c);
    all = all && r.ok;
    if (g_json) {
      arr.push_back(to_json(r));
      continue;
    }
    std::cout << "n = " << c << (r.ok ? "  ok" : "  FAILED") << "\n";
    for (const auto& l : r.lines)
      std::cout << "  " << l.name << "  unit=" << (l.is_unit ? "yes" : "no") << "  " << to_string(l.reciprocity)
                << "  N_" << c << " = " << to_string(l.norm) << "\n";
  }
  if (g_json) emit(Json{{"ok", all}, {"tables", arr}});
  return all ? 0 : 1;
}

int cmd_verify_paper(unsigned workers, std::vector<int> only) {
  AcceptanceOptions opt;
  opt.workers = workers_or_default(workers);
  auto suite = acceptance_suite(opt);
  Json arr = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    CriterionResult r = run_criterion(suite[i], id);
    all = all && r.passed;
    if (g_json) {
      arr.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
    } else {
      std::printf("[%s] %d %s (%.2f s): %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
      std::fflush(stdout);
    }
  }
  if (g_json) emit(Json{{"passed", all}, {"criteria", arr}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact integer circulant determinants"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "machine-readable output");

  long n = 15;
  std::string poly, value;

  auto* eval = app.add_subcommand("eval", "M_n(F) with its norm profile");
  eval->add_option("--n", n, "modulus")->required()->check(CLI::PositiveNumber);
  eval->add_option("--poly", poly, "polynomial text or [c0,c1,...]")->required();

  std::vector<long> ds;
  long norms_n = 0;
  auto* norms = app.add_subcommand("norms", "N_d(F) and unit status");
  norms->add_option("--poly", poly)->required();
  norms->add_option("--d", ds, "conductor, repeatable")->check(CLI::PositiveNumber);
  norms->add_option("--n", norms_n, "all divisors of n")->check(CLI::PositiveNumber);

  long cd = 1, cwith = 0;
  auto* cyc = app.add_subcommand("cyclotomic", "Phi_d, optionally Res(Phi_d, Phi_e)");
  cyc->add_option("--d", cd)->required()->check(CLI::PositiveNumber);
  cyc->add_option("--resultant-with", cwith)->check(CLI::PositiveNumber);

  WitnessArgs wa;
  auto* wit = app.add_subcommand("witness", "witness polynomial for a value or from a family");
  wit->add_option("--n", wa.n)->check(CLI::PositiveNumber);
  wit->add_option("--value", wa.value, "target determinant");
  wit->add_option("--family", wa.family)->check(CLI::IsMember({"p3m", "f3", "f4", "3sq5sq", "good-form", "fixed", "shift"}));
  wit->add_option("--p", wa.p);
  wit->add_option("--m", wa.m);
  wit->add_option("--name", wa.name, "registry entry for --family fixed");
  wit->add_option("--poly", wa.poly, "base polynomial for --family shift");
  wit->add_option("--k", wa.k);
  wit->add_option("--lambda", wa.lambda);

  long cprime = 0, cupto = 0;
  unsigned workers = 0;
  auto* cls = app.add_subcommand("classify", "good/bad tag of a prime or an element of Z[w_15]");
  cls->add_option("--prime", cprime)->check(CLI::PositiveNumber);
  cls->add_option("--primes-up-to", cupto)->check(CLI::PositiveNumber);
  cls->add_option("--poly", poly);
  cls->add_option("--workers", workers);

  long sp = 0;
  auto* split = app.add_subcommand("split-prime", "splitting of p in Z[w_15] and its small representations");
  split->add_option("--p", sp)->required()->check(CLI::PositiveNumber);

  bool no_witness = false;
  long trial_bound = kTrialDivisionBound;
  auto* mem = app.add_subcommand("member", "is v an n x n circulant determinant (n = 15, p, 2p)");
  mem->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  mem->add_option("--value", value)->required();
  mem->add_flag("--no-witness", no_witness, "skip witness synthesis");
  mem->add_option("--trial-bound", trial_bound)->check(CLI::PositiveNumber);

  long bound = 1, form_prime = 0;
  std::string out = "-";
  double budget = 2.0e9;
  bool check = false;
  auto* search = app.add_subcommand("search", "enumerate M_n over [-b, b]^n as JSON lines");
  search->add_option("--n", n)->check(CLI::PositiveNumber);
  search->add_option("--bound", bound)->check(CLI::NonNegativeNumber);
  search->add_option("--out", out, "output file, - for stdout");
  search->add_option("--workers", workers);
  search->add_option("--budget", budget, "maximum vectors visited")->check(CLI::PositiveNumber);
  search->add_flag("--check", check, "run the consistency report");
  search->add_option("--form-prime", form_prime, "search first forms of norm p instead");

  long un = 0;
  auto* vu = app.add_subcommand("verify-units", "check the tabulated unit generators");
  vu->add_option("--n", un)->check(CLI::PositiveNumber);

  std::vector<int> only;
  auto* vp = app.add_subcommand("verify-paper", "run the full acceptance suite");
  vp->add_option("--workers", workers);
  vp->add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*eval) return cmd_eval(n, poly);
    if (*norms) return cmd_norms(poly, ds, norms_n);
    if (*cyc) return cmd_cyclotomic(cd, cwith);
    if (*wit) return cmd_witness(wa);
    if (*cls) return cmd_classify(cprime, cupto, poly, workers);
    if (*split) return cmd_split(sp);
    if (*mem) return cmd_member(n, value, no_witness, trial_bound);
    if (*search) return cmd_search(n, bound, out, workers, budget, check, form_prime);
    if (*vu) return cmd_verify_units(un);
    if (*vp) return cmd_verify_paper(workers, only);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
