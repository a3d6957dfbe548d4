// Fraction-free determinants (Bareiss) over exact integer types.
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace circdet {

namespace detail {

inline void divexact_inplace(BigInt& a, const BigInt& b) { mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()); }
inline void divexact_inplace(i128& a, const i128& b) { a /= b; }
inline void divexact_inplace(long& a, const long& b) { a /= b; }

inline void fms(BigInt& out, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  // out = a*b - c*d without temporaries beyond one
  mpz_mul(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_submul(out.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}
inline void fms(i128& out, const i128& a, const i128& b, const i128& c, const i128& d) { out = a * b - c * d; }
inline void fms(long& out, const long& a, const long& b, const long& c, const long& d) { out = a * b - c * d; }

}  // namespace detail

/// Determinant of the row-major k x k matrix `a`, destroying it. Rows are
/// swapped when a pivot vanishes.
template <class T>
T bareiss_det(T* a, std::size_t k) {
  if (k == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t col = 0; col + 1 < k; ++col) {
    if (a[col * k + col] == 0) {
      std::size_t r = col + 1;
      while (r < k && a[r * k + col] == 0) ++r;
      if (r == k) return T(0);
      for (std::size_t j = 0; j < k; ++j) std::swap(a[col * k + j], a[r * k + j]);
      negate = !negate;
    }
    const T& piv = a[col * k + col];
    for (std::size_t i = col + 1; i < k; ++i) {
      for (std::size_t j = col + 1; j < k; ++j) {
        T v;
        detail::fms(v, piv, a[i * k + j], a[i * k + col], a[col * k + j]);
        detail::divexact_inplace(v, prev);
        a[i * k + j] = std::move(v);
      }
    }
    prev = piv;
  }
  T det = a[(k - 1) * k + (k - 1)];
  return negate ? T(-det) : det;
}

template <class T>
T bareiss_det(std::vector<T> a, std::size_t k) {
  return bareiss_det(a.data(), k);
}

/// log2 of the Hadamard bound of a row-major k x k matrix given as doubles.
inline double hadamard_log2(const double* a, std::size_t k) {
  double total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < k; ++j) s += a[i * k + j] * a[i * k + j];
    if (s == 0) return -1e300;
    total += 0.5 * std::log2(s);
  }
  return total;
}

/// Determinant of a BigInt matrix, using __int128 when the Hadamard bound
/// guarantees no intermediate overflow.
inline BigInt det_auto(const std::vector<BigInt>& m, std::size_t k) {
  if (k == 0) return 1;
  bool small = true;
  std::vector<double> d(k * k);
  for (std::size_t i = 0; i < k * k; ++i) {
    if (!m[i].fits_slong_p()) {
      small = false;
      break;
    }
    d[i] = m[i].get_d();
  }
  if (small && hadamard_log2(d.data(), k) < 60.0) {
    std::vector<i128> w(k * k);
    for (std::size_t i = 0; i < k * k; ++i) w[i] = m[i].get_si();
    return from_i128(bareiss_det(w.data(), k));
  }
  std::vector<BigInt> w = m;
  return bareiss_det(w.data(), k);
}

}  // namespace circdet
