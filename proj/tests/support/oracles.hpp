// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by the tests. They share no code with
// the library beyond plain data types and are written for clarity, not speed.

#pragma once

#include "ldseq/digits.hpp"
#include "ldseq/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Coeffs = std::vector<std::uint32_t>;  // constant term first
using ldseq::Rational;

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Schoolbook product over Z_p.
inline Coeffs mul_mod_p(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

inline std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  return 0;
}

/// Remainder over Z_p by any nonzero g.
inline Coeffs rem_mod_p(Coeffs a, Coeffs g, std::uint32_t p) {
  trim(a);
  trim(g);
  const std::uint32_t li = inv_mod_p(g.back(), p);
  while (a.size() >= g.size()) {
    const std::uint32_t f = a.back() * li % p;
    const std::size_t sh = a.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) a[sh + i] = (a[sh + i] + (p - f) * g[i]) % p;
    trim(a);
  }
  return a;
}

/// Element code <-> coefficient vector of length k.
inline Coeffs code_coeffs(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  Coeffs c(k);
  for (auto& x : c) {
    x = code % p;
    code /= p;
  }
  return c;
}

inline std::uint32_t coeffs_code(Coeffs c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

/// GF(p^k) product by multiply-then-reduce.
inline std::uint32_t gf_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, const Coeffs& modulus) {
  const std::uint32_t k = static_cast<std::uint32_t>(modulus.size() - 1);
  Coeffs c = rem_mod_p(mul_mod_p(code_coeffs(a, p, k), code_coeffs(b, p, k), p), modulus, p);
  c.resize(k, 0);
  return coeffs_code(c, p);
}

/// Irreducibility over Z_p by exhaustive search over every monic divisor.
inline bool irreducible_exhaustive(const Coeffs& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d < n; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Coeffs g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (rem_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Base-q digits of n reversed behind the radix point, as a rational.
inline Rational radical_inverse(std::uint64_t n, std::uint32_t q) {
  Rational v = 0;
  Rational w(1, q);
  while (n) {
    v += w * (n % q);
    w /= q;
    n /= q;
  }
  return v;
}

/// Mixed-radix inverse by repeated division.
inline Rational cantor_radical_inverse(std::uint64_t n, const std::vector<std::uint32_t>& radices) {
  Rational v = 0;
  ldseq::BigInt den = 1;
  for (std::size_t j = 0; n && j < radices.size(); ++j) {
    den *= radices[j];
    v += Rational(ldseq::BigInt(n % radices[j]), den);
    n /= radices[j];
  }
  return v;
}

/// Number of the points lying in prod [a_i / b^d_i, (a_i + 1) / b^d_i).
inline std::uint64_t count_in_interval(const std::vector<ldseq::Point>& pts, std::uint32_t b,
                                       const std::vector<std::uint64_t>& a, const std::vector<std::size_t>& d) {
  std::uint64_t c = 0;
  for (const auto& x : pts) {
    bool in = true;
    for (std::size_t i = 0; i < a.size() && in; ++i) {
      const Rational w(1, ldseq::ipow(b, d[i]));
      const Rational v = x[i].value();
      in = v >= w * a[i] && v < w * (a[i] + 1);
    }
    if (in) ++c;
  }
  return c;
}

/// Net property by enumerating every elementary interval of volume b^{t-m}.
inline bool is_net_bruteforce(const std::vector<ldseq::Point>& pts, std::uint32_t b, std::size_t t, std::size_t m) {
  const std::size_t s = pts.front().size();
  std::vector<std::size_t> d(s, 0);
  const std::uint64_t want = ldseq::upow(b, t);
  bool ok = true;
  auto check = [&](const std::vector<std::size_t>& dv) {
    std::vector<std::uint64_t> a(s, 0);
    while (true) {
      if (count_in_interval(pts, b, a, dv) != want) return false;
      std::size_t i = 0;
      while (i < s && ++a[i] == ldseq::upow(b, dv[i])) a[i++] = 0;
      if (i == s) return true;
    }
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (!ok) return;
    if (i + 1 == s) {
      d[i] = left;
      ok = check(d);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      d[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, m - t);
  return ok;
}

/// One-dimensional star discrepancy: with sorted x_1 <= ... <= x_N,
/// D* = max_i max(i/N - x_i, x_i - (i-1)/N).
inline Rational star_discrepancy_1d(std::vector<Rational> x) {
  std::sort(x.begin(), x.end());
  const std::size_t n = x.size();
  Rational best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational hi = Rational(static_cast<std::uint64_t>(i + 1), static_cast<std::uint64_t>(n)) - x[i];
    const Rational lo = x[i] - Rational(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(n));
    best = std::max({best, hi, lo});
  }
  return best;
}

/// max over grid corners y in {1/res, ..., 1}^s of |A([0,y))/N - lambda|.
inline Rational grid_lower_bound(const std::vector<std::vector<Rational>>& pts, std::uint32_t res) {
  const std::size_t s = pts.front().size();
  const std::size_t n = pts.size();
  std::vector<std::uint32_t> g(s, 1);
  Rational best = 0;
  while (true) {
    Rational lam = 1;
    for (auto v : g) lam *= Rational(v, res);
    std::uint64_t c = 0;
    for (const auto& x : pts) {
      bool in = true;
      for (std::size_t i = 0; i < s && in; ++i) in = x[i] < Rational(g[i], res);
      if (in) ++c;
    }
    Rational d = Rational(c, static_cast<std::uint64_t>(n)) - lam;
    if (d < 0) d = -d;
    best = std::max(best, d);
    std::size_t i = 0;
    while (i < s && ++g[i] > res) g[i++] = 1;
    if (i == s) return best;
  }
}

/// Index of the first differing digit (1-based), or 0 if the stored values agree.
inline std::size_t first_difference(const Rational& x, const Rational& y, std::uint32_t b, std::size_t limit) {
  Rational dx = x;
  Rational dy = y;
  for (std::size_t j = 1; j <= limit; ++j) {
    dx *= b;
    dy *= b;
    const ldseq::BigInt ix = numerator(dx) / denominator(dx);
    const ldseq::BigInt iy = numerator(dy) / denominator(dy);
    if (ix != iy) return j;
    dx -= ix;
    dy -= iy;
  }
  return 0;
}

}  // namespace oracle
