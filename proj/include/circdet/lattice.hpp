// LLL reduction and shell enumeration for ideal lattices in Z[w_d].
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arith.hpp"
#include "cyclonorm.hpp"
#include "modpoly.hpp"

namespace circdet {

using LatticeBasis = std::vector<std::vector<i128>>;

/// In-place LLL (delta = 0.99) on integer row vectors.
inline void lll_reduce(LatticeBasis& b, long double delta = 0.99L) {
  const std::size_t n = b.size();
  if (n == 0) return;
  const std::size_t dim = b[0].size();
  std::vector<std::vector<long double>> bs(n, std::vector<long double>(dim));
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n));
  std::vector<long double> bn(n);
  auto gso = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < dim; ++j) bs[i][j] = static_cast<long double>(b[i][j]);
      for (std::size_t k = 0; k < i; ++k) {
        long double dot = 0;
        for (std::size_t j = 0; j < dim; ++j) dot += static_cast<long double>(b[i][j]) * bs[k][j];
        mu[i][k] = bn[k] > 0 ? dot / bn[k] : 0;
        for (std::size_t j = 0; j < dim; ++j) bs[i][j] -= mu[i][k] * bs[k][j];
      }
      bn[i] = 0;
      for (std::size_t j = 0; j < dim; ++j) bn[i] += bs[i][j] * bs[i][j];
    }
  };
  gso();
  std::size_t k = 1;
  int guard = 0;
  while (k < n) {
    if (++guard > 100000) throw InternalError("LLL did not converge");
    for (std::size_t jj = k; jj-- > 0;) {
      long double q = std::nearbyint(mu[k][jj]);
      if (q != 0) {
        i128 qi = static_cast<i128>(q);
        for (std::size_t t = 0; t < dim; ++t) b[k][t] -= qi * b[jj][t];
        gso();
      }
    }
    if (bn[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bn[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gso();
      k = k > 1 ? k - 1 : 1;
    }
  }
}

/// Basis of the ideal (p, h(w)) in Z[w_d], h a monic factor of Phi_d mod p:
/// p*x^i for i < deg h, and x^i - (x^i mod h) for the remaining i.
inline LatticeBasis ideal_basis(long d, std::uint64_t p, const ModPoly& h) {
  const long k = euler_phi(d);
  const long f = modp::deg(h);
  LatticeBasis b;
  const i128 P = static_cast<i128>(p);
  for (long i = 0; i < f; ++i) {
    std::vector<i128> row(static_cast<std::size_t>(k), 0);
    row[static_cast<std::size_t>(i)] = P;
    b.push_back(row);
  }
  for (long i = f; i < k; ++i) {
    ModPoly xi(static_cast<std::size_t>(i + 1), 0);
    xi[static_cast<std::size_t>(i)] = 1;
    ModPoly r = modp::rem(xi, h, p);
    std::vector<i128> row(static_cast<std::size_t>(k), 0);
    row[static_cast<std::size_t>(i)] = 1;
    for (std::size_t j = 0; j < r.size(); ++j) {
      i128 v = static_cast<i128>(r[j]);
      if (2 * v > P) v -= P;
      row[j] -= v;
    }
    b.push_back(row);
  }
  return b;
}

struct ShellSearchOptions {
  long max_shell = 3;
};

/// Visits lattice vectors sum c_i b_i in increasing sup-norm shells of c,
/// lexicographic within a shell and one representative of each +-pair, until
/// `accept` returns true. The first accepted element is returned.
inline std::optional<CycloElement> shell_search(long d, const LatticeBasis& b, const BigInt& target_abs_norm,
                                                const std::function<bool(const CycloElement&)>& accept,
                                                ShellSearchOptions opt = {}) {
  const std::size_t n = b.size();
  const std::size_t dim = n ? b[0].size() : 0;
  // embeddings, one per conjugate pair
  std::vector<long> ks;
  for (long k = 1; k <= d / 2; ++k)
    if (gcd(k, d) == 1) ks.push_back(k);
  const long double pi = 3.141592653589793238462643383279502884L;
  std::vector<std::vector<std::complex<long double>>> emb(n, std::vector<std::complex<long double>>(ks.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < ks.size(); ++t) {
      std::complex<long double> z = std::polar(1.0L, 2 * pi * ks[t] / static_cast<long double>(d)), zp = 1, acc = 0;
      for (std::size_t j = 0; j < dim; ++j) {
        acc += static_cast<long double>(b[i][j]) * zp;
        zp *= z;
      }
      emb[i][t] = acc;
    }
  const long double log_target = std::log(static_cast<long double>(target_abs_norm.get_d()));

  std::vector<long> c(n);
  std::vector<std::complex<long double>> e(ks.size());
  for (long s = 1; s <= opt.max_shell; ++s) {
    // odometer over [-s, s]^n, keep vectors with sup-norm exactly s
    for (auto& v : c) v = -s;
    for (;;) {
      long mx = 0;
      long first_nz = 0;
      for (std::size_t i = 0; i < n; ++i) {
        mx = std::max(mx, std::labs(c[i]));
        if (!first_nz && c[i]) first_nz = c[i];
      }
      if (mx == s && first_nz > 0) {
        long double lg = 0;
        for (std::size_t t = 0; t < ks.size(); ++t) {
          std::complex<long double> acc = 0;
          for (std::size_t i = 0; i < n; ++i)
            if (c[i]) acc += static_cast<long double>(c[i]) * emb[i][t];
          lg += 2 * std::log(std::abs(acc));
        }
        if (std::fabs(lg - log_target) < 1e-6L) {
          std::vector<BigInt> coords(dim);
          for (std::size_t j = 0; j < dim; ++j) {
            i128 v = 0;
            for (std::size_t i = 0; i < n; ++i) v += static_cast<i128>(c[i]) * b[i][j];
            coords[j] = from_i128(v);
          }
          CycloElement el{d, coords};
          BigInt nv = norm(el);
          if (abs(nv) == target_abs_norm && accept(el)) return el;
        }
      }
      std::size_t i = n;
      while (i-- > 0) {
        if (c[i] < s) {
          ++c[i];
          break;
        }
        c[i] = -s;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
  }
  return std::nullopt;
}

/// An element generating the prime ideal (p, h(w)) of Z[w_d], i.e. of norm
/// p^f with f = deg h.
inline CycloElement ideal_generator(long d, std::uint64_t p, const ModPoly& h, ShellSearchOptions opt = {}) {
  LatticeBasis b = ideal_basis(d, p, h);
  lll_reduce(b);
  BigInt target = pow(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>(modp::deg(h)));
  auto r = shell_search(d, b, target, [](const CycloElement&) { return true; }, opt);
  if (!r)
    throw SearchExhausted("no generator of norm " + target.get_str() + " within shell " + std::to_string(opt.max_shell));
  return *r;
}

}  // namespace circdet
