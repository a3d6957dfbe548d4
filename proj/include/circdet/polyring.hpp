// Dense polynomials over Z: arithmetic, quotient by x^n - 1, cyclotomic
// polynomials, resultants and a small text format.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "linalg.hpp"

namespace circdet {

/// Coefficient i is the coefficient of x^i. No trailing zeros; zero is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long> c) {
    c_.reserve(c.size());
    for (long v : c) c_.emplace_back(v);
    trim();
  }
  static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }
  static IntPoly monomial(const BigInt& coef, std::size_t k) {
    std::vector<BigInt> c(k + 1);
    c[k] = coef;
    return IntPoly(std::move(c));
  }
  static IntPoly x_pow(std::size_t k) { return monomial(1, k); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  BigInt operator[](std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  const BigInt& lead() const { return c_.back(); }

  BigInt eval(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
  }
  BigInt at_one() const {
    BigInt r = 0;
    for (const auto& v : c_) r += v;
    return r;
  }

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  IntPoly& operator*=(const BigInt& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    return IntPoly(std::move(r));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  /// Multiply by x^k.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(k + c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
  }

  /// F(x^k), k >= 1.
  IntPoly compose_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return IntPoly(std::move(r));
  }

  /// F(-x).
  IntPoly negate_x() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// x^deg F(1/x).
  IntPoly reversed() const {
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
  }

  BigInt content() const {
    BigInt g = 0;
    for (const auto& v : c_) g = gcd(g, v);
    return g;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

class ParseError : public DomainError {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : DomainError(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

namespace detail {

struct PolyLexer {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
  }
  bool at_end() {
    skip_ws();
    return i >= s.size();
  }
  // Accepts '-' and U+2212 as minus.
  int sign_char() {
    skip_ws();
    if (i < s.size() && s[i] == '+') {
      ++i;
      return 1;
    }
    if (i < s.size() && s[i] == '-') {
      ++i;
      return -1;
    }
    if (s.substr(i, 3) == "\xE2\x88\x92") {
      i += 3;
      return -1;
    }
    return 0;
  }
  bool digits(std::string& out) {
    skip_ws();
    std::size_t st = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    out.assign(s.substr(st, i - st));
    return i > st;
  }
};

}  // namespace detail

/// Parses "1 - x + 2x^3", "2*x^3" or "[1,-1,0,2]".
inline IntPoly parse_poly(std::string_view text) {
  detail::PolyLexer lx{text};
  if (lx.at_end()) throw ParseError("empty polynomial", 0);
  if (text[lx.i] == '[') {
    ++lx.i;
    std::vector<BigInt> c;
    if (lx.at_end()) throw ParseError("unterminated list", lx.i);
    if (text[lx.i] == ']') {
      ++lx.i;
      if (!lx.at_end()) throw ParseError("trailing input", lx.i);
      return {};
    }
    for (;;) {
      std::size_t st = lx.i;
      int sg = lx.sign_char();
      std::string d;
      if (!lx.digits(d)) throw ParseError("expected integer", lx.i < text.size() ? lx.i : st);
      BigInt v(d);
      c.push_back(sg < 0 ? BigInt(-v) : v);
      if (lx.at_end()) throw ParseError("unterminated list", lx.i);
      if (text[lx.i] == ',') {
        ++lx.i;
        continue;
      }
      if (text[lx.i] == ']') {
        ++lx.i;
        break;
      }
      throw ParseError("expected ',' or ']'", lx.i);
    }
    if (!lx.at_end()) throw ParseError("trailing input", lx.i);
    return IntPoly(std::move(c));
  }

  std::map<std::size_t, BigInt> acc;
  bool first = true;
  while (!lx.at_end()) {
    std::size_t term_start = lx.i;
    int sg = lx.sign_char();
    if (sg == 0) {
      if (!first) throw ParseError("expected '+' or '-'", lx.i);
      sg = 1;
    }
    first = false;
    std::string d;
    bool has_coef = lx.digits(d);
    BigInt coef = has_coef ? BigInt(d) : BigInt(1);
    lx.skip_ws();
    std::size_t exp = 0;
    bool has_x = false;
    if (lx.i < text.size() && text[lx.i] == '*') {
      if (!has_coef) throw ParseError("unexpected '*'", lx.i);
      ++lx.i;
      lx.skip_ws();
      if (lx.i >= text.size() || text[lx.i] != 'x') throw ParseError("expected 'x' after '*'", lx.i);
    }
    if (lx.i < text.size() && text[lx.i] == 'x') {
      has_x = true;
      ++lx.i;
      exp = 1;
      lx.skip_ws();
      if (lx.i < text.size() && text[lx.i] == '^') {
        ++lx.i;
        lx.skip_ws();
        if (lx.i < text.size() && (text[lx.i] == '-' || text.substr(lx.i, 3) == "\xE2\x88\x92"))
          throw ParseError("negative exponent", lx.i);
        std::string e;
        if (!lx.digits(e)) throw ParseError("expected exponent", lx.i);
        if (e.size() > 9) throw ParseError("exponent too large", lx.i);
        exp = static_cast<std::size_t>(std::stoul(e));
      }
    }
    if (!has_coef && !has_x) throw ParseError("expected term", lx.i < text.size() ? lx.i : term_start);
    acc[exp] += sg < 0 ? BigInt(-coef) : coef;
  }
  if (acc.empty()) return {};
  std::vector<BigInt> c(acc.rbegin()->first + 1);
  for (auto& [e, v] : acc) c[e] = v;
  return IntPoly(std::move(c));
}

/// Ascending powers with explicit signs: "1 - x + x^3", "-2x^3", "0".
inline std::string render_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const BigInt& v = f.coeffs()[i];
    if (v == 0) continue;
    BigInt a = abs(v);
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    first = false;
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str();
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

inline std::string render_list(const IntPoly& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += f.coeffs()[i].get_str();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// Division
// ---------------------------------------------------------------------------

class InexactDivision : public DomainError {
 public:
  explicit InexactDivision(IntPoly rem)
      : DomainError("inexact division, remainder " + render_poly(rem)), remainder_(std::move(rem)) {}
  const IntPoly& remainder() const { return remainder_; }

 private:
  IntPoly remainder_;
};

/// Long division over Z. Stops when the leading coefficient of D no longer
/// divides; returns {quotient, remainder}.
inline std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& f, const IntPoly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<BigInt> r = f.coeffs();
  const long dd = d.degree();
  const BigInt& lc = d.lead();
  std::vector<BigInt> q(r.size() > static_cast<std::size_t>(dd) ? r.size() - dd : 0);
  for (long k = static_cast<long>(r.size()) - 1; k >= dd; --k) {
    if (r[k] == 0) continue;
    if (!divides(lc, r[k])) break;
    BigInt t;
    mpz_divexact(t.get_mpz_t(), r[k].get_mpz_t(), lc.get_mpz_t());
    for (long j = 0; j <= dd; ++j) mpz_submul(r[k - dd + j].get_mpz_t(), t.get_mpz_t(), d.coeffs()[j].get_mpz_t());
    q[k - dd] = std::move(t);
  }
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Q with Q*D = F; throws InexactDivision otherwise.
inline IntPoly poly_exact_div(const IntPoly& f, const IntPoly& d) {
  auto [q, r] = poly_divmod(f, d);
  if (!r.is_zero()) throw InexactDivision(r);
  return q;
}

/// Remainder modulo a monic polynomial.
inline IntPoly poly_rem_monic(const IntPoly& f, const IntPoly& d) {
  if (d.is_zero() || d.lead() != 1) throw DomainError("poly_rem_monic needs a monic divisor");
  return poly_divmod(f, d).second;
}

// ---------------------------------------------------------------------------
// The quotient ring Z[x]/(x^n - 1)
// ---------------------------------------------------------------------------

/// F reduced modulo x^n - 1 (indices folded mod n).
inline IntPoly poly_mod_xn(const IntPoly& f, std::size_t n) {
  if (n == 0) throw DomainError("modulus must be positive");
  if (f.size() <= n) return f;
  std::vector<BigInt> r(n);
  for (std::size_t i = 0; i < f.size(); ++i) r[i % n] += f.coeffs()[i];
  return IntPoly(std::move(r));
}

inline IntPoly poly_mul_mod(const IntPoly& f, const IntPoly& g, std::size_t n) {
  IntPoly a = poly_mod_xn(f, n), b = poly_mod_xn(g, n);
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> r(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[(i + j) % n].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  return IntPoly(std::move(r));
}

/// x^e modulo x^n - 1 for any integer e.
inline IntPoly x_pow_mod(const BigInt& e, std::size_t n) {
  BigInt r = mod_floor(e, BigInt(static_cast<unsigned long>(n)));
  return IntPoly::x_pow(r.get_ui());
}

/// (x^e - 1)/(x - 1) modulo x^n - 1. For e < 0 this is -x^e (x^{-e}-1)/(x-1),
/// the element with (x - 1) * result = x^e - 1 and value e at x = 1.
inline IntPoly geometric_mod(const BigInt& e, std::size_t n) {
  const BigInt N(static_cast<unsigned long>(n));
  std::vector<BigInt> c(n);
  if (e >= 0) {
    // number of i in [0, e) with i = r mod n
    for (std::size_t r = 0; r < n; ++r) {
      BigInt t = e - static_cast<unsigned long>(r);
      if (t > 0) c[r] = floor_div(t + N - 1, N);
    }
  } else {
    // -sum_{k=1}^{E} x^{-k}
    BigInt E = -e;
    for (std::size_t r = 0; r < n; ++r) {
      std::size_t rp = (n - r) % n;  // k = rp mod n
      BigInt cnt;
      if (rp == 0) {
        cnt = floor_div(E, N);
      } else if (E >= static_cast<unsigned long>(rp)) {
        cnt = floor_div(E - static_cast<unsigned long>(rp), N) + 1;
      } else {
        cnt = 0;
      }
      c[r] = -cnt;
    }
  }
  return IntPoly(std::move(c));
}

/// (x^e - 1)/(x - 1) as an honest polynomial, e >= 0.
inline IntPoly geometric(std::size_t e) {
  std::vector<BigInt> c(e, BigInt(1));
  return IntPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials
// ---------------------------------------------------------------------------

/// Phi_d, the d-th cyclotomic polynomial.
inline IntPoly cyclotomic(long d) {
  if (d < 1) throw DomainError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  IntPoly num{1}, den{1};
  for (long e : divisors(d)) {
    int mu_v = moebius(d / e);
    if (mu_v == 0) continue;
    IntPoly f = IntPoly::x_pow(static_cast<std::size_t>(e)) - IntPoly{1};
    (mu_v > 0 ? num : den) *= f;
  }
  IntPoly r = poly_exact_div(num, den);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, r);
  return r;
}

// ---------------------------------------------------------------------------
// Resultants
// ---------------------------------------------------------------------------

/// Res(F, G) by the subresultant remainder sequence.
inline BigInt resultant(IntPoly a, IntPoly b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("resultant of the zero polynomial");
  BigInt sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -1;
    std::swap(a, b);
  }
  if (b.degree() == 0) return sign * pow(b.lead(), static_cast<unsigned long>(a.degree()));
  BigInt g = 1, h = 1;
  for (;;) {
    long delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    // pseudo-remainder of a by b
    IntPoly r = a * pow(b.lead(), static_cast<unsigned long>(delta + 1));
    r = poly_divmod(r, b).second;
    if (r.is_zero()) return 0;
    a = b;
    BigInt denom = g * pow(h, static_cast<unsigned long>(delta));
    std::vector<BigInt> rc = r.coeffs();
    for (auto& v : rc) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), denom.get_mpz_t());
    b = IntPoly(std::move(rc));
    g = a.lead();
    if (delta > 0) {
      // h <- g^delta / h^(delta-1)
      BigInt num = pow(g, static_cast<unsigned long>(delta));
      BigInt den = pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() == 0) {
      long da = a.degree();
      BigInt num = pow(b.lead(), static_cast<unsigned long>(da));
      BigInt den = pow(h, static_cast<unsigned long>(da - 1));
      BigInt hh;
      mpz_divexact(hh.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * hh;
    }
  }
}

/// Sylvester matrix of F and G, row-major, size deg F + deg G.
inline std::vector<BigInt> sylvester_matrix(const IntPoly& f, const IntPoly& g) {
  const long m = f.degree(), n = g.degree();
  const std::size_t k = static_cast<std::size_t>(m + n);
  std::vector<BigInt> s(k * k);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j <= m; ++j) s[i * k + i + j] = f.coeffs()[m - j];
  for (long i = 0; i < m; ++i)
    for (long j = 0; j <= n; ++j) s[(n + i) * k + i + j] = g.coeffs()[n - j];
  return s;
}

/// Res(F, G) as the determinant of the Sylvester matrix.
inline BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of the zero polynomial");
  if (f.degree() == 0) return pow(f.lead(), static_cast<unsigned long>(g.degree()));
  if (g.degree() == 0) return pow(g.lead(), static_cast<unsigned long>(f.degree()));
  auto s = sylvester_matrix(f, g);
  return bareiss_det(s.data(), static_cast<std::size_t>(f.degree() + g.degree()));
}

}  // namespace circdet
