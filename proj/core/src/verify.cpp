// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/verify.hpp"

#include "ldseq/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ldseq {

namespace {

void check_base(std::uint32_t b) {
  if (b < 2) throw UsageError("base must be at least 2, got " + std::to_string(b));
}

// Largest m with b^m < 2^63.
std::size_t max_digits_u64(std::uint32_t b) {
  std::size_t m = 0;
  std::uint64_t v = 1;
  while (v <= (std::numeric_limits<std::uint64_t>::max() >> 1) / b) {
    v *= b;
    ++m;
  }
  return m;
}

void check_point_digits(const Point& x, std::size_t s, std::uint32_t b, std::size_t need) {
  if (x.size() != s) throw UsageError("points have inconsistent dimensions");
  for (const auto& c : x) {
    if (!c.uniform() || c.base() != b) throw UsageError("coordinate is not a base-" + std::to_string(b) + " digit string");
    if (c.size() < need && !c.exact())
      throw UsageError("digit precision " + std::to_string(c.size()) + " is below the required " + std::to_string(need));
  }
}

// Per point and coordinate, the integer formed by the first d digits, d = 0..m.
struct PrefixTable {
  std::size_t s = 0;
  std::size_t m = 0;
  std::vector<std::uint64_t> data;  // [(n * s + i) * (m + 1) + d]

  std::uint64_t at(std::size_t n, std::size_t i, std::size_t d) const { return data[(n * s + i) * (m + 1) + d]; }
};

PrefixTable build_prefixes(std::span<const Point> points, std::uint32_t b, std::size_t m) {
  PrefixTable t;
  t.s = points.empty() ? 0 : points.front().size();
  t.m = m;
  t.data.resize(points.size() * t.s * (m + 1));
  for (std::size_t n = 0; n < points.size(); ++n) {
    for (std::size_t i = 0; i < t.s; ++i) {
      std::uint64_t v = 0;
      std::uint64_t* out = &t.data[(n * t.s + i) * (m + 1)];
      out[0] = 0;
      for (std::size_t d = 1; d <= m; ++d) {
        v = v * b + points[n][i].digit_or_zero(d - 1);
        out[d] = v;
      }
    }
  }
  return t;
}

// Calls f(d) for every composition d_1 + ... + d_s = total; stops when f
// returns false.
template <typename F>
bool compositions(std::vector<std::size_t>& d, std::size_t i, std::size_t left, F& f) {
  if (i + 1 == d.size()) {
    d[i] = left;
    return f(d);
  }
  for (std::size_t v = 0; v <= left; ++v) {
    d[i] = v;
    if (!compositions(d, i + 1, left - v, f)) return false;
  }
  return true;
}

template <typename F>
void for_each_composition(std::size_t s, std::size_t total, F&& f) {
  std::vector<std::size_t> d(s, 0);
  compositions(d, 0, total, f);
}

struct NetCheck {
  bool ok = true;
  ElementaryInterval violation;
  std::uint64_t count = 0;
};

NetCheck check_net(const PrefixTable& pre, std::size_t npoints, std::uint32_t b, std::size_t t, std::size_t m) {
  NetCheck out;
  const std::size_t s = pre.s;
  const std::uint64_t cells = upow(b, m - t);
  const std::uint64_t want = upow(b, t);
  std::vector<std::uint32_t> counts(cells);
  std::vector<std::uint64_t> weight(s);
  for_each_composition(s, m - t, [&](const std::vector<std::size_t>& d) {
    std::uint64_t w = 1;
    for (std::size_t i = s; i-- > 0;) {
      weight[i] = w;
      w *= upow(b, d[i]);
    }
    std::fill(counts.begin(), counts.end(), 0U);
    for (std::size_t n = 0; n < npoints; ++n) {
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < s; ++i) key += pre.at(n, i, d[i]) * weight[i];
      ++counts[key];
    }
    for (std::uint64_t c = 0; c < cells; ++c) {
      if (counts[c] == want) continue;
      out.ok = false;
      out.count = counts[c];
      out.violation.base = b;
      out.violation.d = d;
      out.violation.a.assign(s, 0);
      for (std::size_t i = 0; i < s; ++i) out.violation.a[i] = (c / weight[i]) % upow(b, d[i]);
      return false;
    }
    return true;
  });
  return out;
}

void validate_net_input(std::span<const Point> points, std::uint32_t b, std::size_t m) {
  check_base(b);
  if (m > max_digits_u64(b) || m > 40) throw UsageError("m = " + std::to_string(m) + " is too large");
  const std::uint64_t n = upow(b, m);
  if (points.size() != n)
    throw UsageError("expected b^m = " + std::to_string(n) + " points, got " + std::to_string(points.size()));
  const std::size_t s = points.front().size();
  if (s == 0) throw UsageError("points must have at least one coordinate");
  for (const auto& x : points) check_point_digits(x, s, b, m);
}

std::size_t exact_t_from(const PrefixTable& pre, std::size_t npoints, std::uint32_t b, std::size_t m) {
  std::size_t lo = 0;
  std::size_t hi = m;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (check_net(pre, npoints, b, mid, m).ok)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

DigitString combine(const FieldSpec& field, const DigitString& x, const DigitString& y, bool subtract) {
  if (!x.uniform() || !y.uniform() || x.base() != y.base())
    throw UsageError("digit shift needs two digit strings in the same base");
  if (x.base() != field.order())
    throw UsageError("digit base " + std::to_string(x.base()) + " does not match " + field.describe());
  if (x.size() != y.size()) throw UsageError("digit shift needs equal precision");
  std::vector<std::uint32_t> v(x.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = subtract ? field.sub(x[j], y[j]) : field.add(x[j], y[j]);
  return DigitString(x.base(), std::move(v), x.exact() && y.exact());
}

// Per-coordinate factor of a pair: -(index of first differing digit, 1-based).
struct Factor {
  bool differ = false;
  bool exact = true;
  std::int64_t exponent = 0;
};

Factor coordinate_factor(const DigitString& x, const DigitString& y) {
  // Digits past an inexact string are unknown; past an exact one they are 0.
  std::size_t known = std::max(x.size(), y.size());
  if (!x.exact()) known = std::min(known, x.size());
  if (!y.exact()) known = std::min(known, y.size());
  for (std::size_t j = 0; j < known; ++j)
    if (x.digit_or_zero(j) != y.digit_or_zero(j)) return {true, true, -static_cast<std::int64_t>(j + 1)};
  if (x.exact() && y.exact()) return {false, true, 0};
  return {false, false, -static_cast<std::int64_t>(known)};
}

// Highest base-b digit index where n and k differ (n != k).
std::int64_t int_diff_exponent(std::uint64_t n, std::uint64_t k, std::uint32_t b) {
  std::int64_t h = -1;
  for (std::int64_t j = 0; n || k; ++j) {
    if (n % b != k % b) h = j;
    n /= b;
    k /= b;
  }
  return h;
}

enum class Form { kWeak, kSequence, kPointSet };

AdmissibilityReport scan_pairs(std::span<const Point> points, std::uint32_t b, Form form, std::int64_t threshold) {
  check_base(b);
  AdmissibilityReport rep;
  if (points.size() < 2) {
    rep.admissible = true;
    rep.min_is_zero = false;
    rep.min_exponent = std::numeric_limits<std::int64_t>::max();
    return rep;
  }
  const std::size_t s = points.front().size();
  for (const auto& x : points) check_point_digits(x, s, b, 0);
  bool have_min = false;
  auto record = [&](bool zero, std::int64_t e, std::uint64_t k, std::uint64_t n) {
    bool better = !have_min || (zero && !rep.min_is_zero) || (!zero && !rep.min_is_zero && e < rep.min_exponent);
    if (better) {
      have_min = true;
      rep.min_is_zero = zero;
      rep.min_exponent = zero ? 0 : e;
      rep.worst_k = k;
      rep.worst_n = n;
    }
  };
  for (std::uint64_t n = 1; n < points.size(); ++n) {
    for (std::uint64_t k = 0; k < n; ++k) {
      ++rep.pairs_checked;
      std::int64_t e = form == Form::kSequence ? int_diff_exponent(n, k, b) : 0;
      bool zero = false;
      bool certain = true;
      for (std::size_t i = 0; i < s; ++i) {
        const Factor f = coordinate_factor(points[n][i], points[k][i]);
        if (f.differ) {
          e += f.exponent;
        } else if (f.exact) {
          zero = true;
        } else {
          certain = false;
          e += f.exponent;
        }
      }
      if (!certain && !zero) {
        // Only an upper bound b^e is known for this pair.
        const bool decided = form != Form::kWeak && (form == Form::kSequence ? e < threshold : e <= threshold);
        if (!decided)
          throw CertificationError("points " + std::to_string(k) + " and " + std::to_string(n) +
                                   " agree on all stored digits; precision cannot certify a nonzero norm");
        ++rep.violations;
        record(false, e, k, n);
        continue;
      }
      record(zero, e, k, n);
      if (form == Form::kWeak) {
        if (zero) ++rep.violations;
      } else {
        const bool ok = !zero && (form == Form::kSequence ? e >= threshold : e > threshold);
        if (!ok) ++rep.violations;
      }
    }
  }
  rep.admissible = rep.violations == 0;
  return rep;
}

}  // namespace

Rational ElementaryInterval::volume() const {
  std::size_t total = 0;
  for (auto v : d) total += v;
  return Rational(1, ipow(base, total));
}

bool ElementaryInterval::contains(const Point& x) const {
  if (x.size() != a.size()) throw UsageError("dimension mismatch in elementary interval test");
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < d[i]; ++j) v = v * base + x[i].digit_or_zero(j);
    if (v != a[i]) return false;
  }
  return true;
}

NetReport is_net(std::span<const Point> points, std::uint32_t b, std::size_t t, std::size_t m) {
  validate_net_input(points, b, m);
  NetReport rep;
  rep.m = m;
  rep.s = points.front().size();
  rep.b = b;
  rep.t = t;
  if (t > m) throw UsageError("t = " + std::to_string(t) + " exceeds m = " + std::to_string(m));
  const PrefixTable pre = build_prefixes(points, b, m);
  NetCheck c = check_net(pre, points.size(), b, t, m);
  rep.verified = c.ok;
  if (!c.ok) {
    rep.violation = std::move(c.violation);
    rep.violation_count = c.count;
  }
  rep.exact_t = exact_t_from(pre, points.size(), b, m);
  return rep;
}

std::size_t exact_t_value(std::span<const Point> points, std::uint32_t b, std::size_t m) {
  validate_net_input(points, b, m);
  const PrefixTable pre = build_prefixes(points, b, m);
  return exact_t_from(pre, points.size(), b, m);
}

DigitString digit_shift(const FieldSpec& field, const DigitString& x, const DigitString& y) {
  return combine(field, x, y, false);
}

DigitString digit_unshift(const FieldSpec& field, const DigitString& x, const DigitString& y) {
  return combine(field, x, y, true);
}

DigitString digit_negate(const FieldSpec& field, const DigitString& x) {
  return combine(field, DigitString(x.base(), std::vector<std::uint32_t>(x.size(), 0), true), x, true);
}

Rational BadicNorm::value() const {
  if (kind == Kind::kZero) return Rational(0);
  if (exponent >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(exponent)));
  return Rational(1, ipow(base, static_cast<std::uint64_t>(-exponent)));
}

BadicNorm norm_b(const DigitString& x) {
  if (!x.uniform()) throw UsageError("norm_b needs a uniform-base digit string");
  BadicNorm r;
  r.base = x.base();
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] != 0) {
      r.kind = BadicNorm::Kind::kPower;
      r.exponent = -static_cast<std::int64_t>(j + 1);
      return r;
    }
  }
  if (x.exact()) {
    r.kind = BadicNorm::Kind::kZero;
  } else {
    r.kind = BadicNorm::Kind::kBelowPrecision;
    r.exponent = -static_cast<std::int64_t>(x.size());
  }
  return r;
}

std::size_t norm_b_int_exponent(std::uint64_t n, std::uint32_t b) {
  check_base(b);
  if (n == 0) throw UsageError("norm_b_int is defined for n >= 1");
  std::size_t k = 0;
  while (n >= b) {
    n /= b;
    ++k;
  }
  return k;
}

std::uint64_t norm_b_int(std::uint64_t n, std::uint32_t b) { return upow(b, norm_b_int_exponent(n, b)); }

BadicNorm pair_norm(const Point& x, const Point& y, std::uint32_t b) {
  check_base(b);
  if (x.size() != y.size()) throw UsageError("dimension mismatch in pair_norm");
  BadicNorm r;
  r.base = b;
  r.kind = BadicNorm::Kind::kPower;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Factor f = coordinate_factor(x[i], y[i]);
    if (!f.differ && f.exact) {
      r.kind = BadicNorm::Kind::kZero;
      r.exponent = 0;
      return r;
    }
    if (!f.differ) r.kind = BadicNorm::Kind::kBelowPrecision;
    r.exponent += f.exponent;
  }
  return r;
}

Rational AdmissibilityReport::min_value(std::uint32_t b) const {
  if (min_is_zero) return Rational(0);
  BadicNorm n;
  n.kind = BadicNorm::Kind::kPower;
  n.exponent = min_exponent;
  n.base = b;
  return n.value();
}

AdmissibilityReport weak_admissibility(std::span<const Point> points, std::uint32_t b) {
  return scan_pairs(points, b, Form::kWeak, 0);
}

AdmissibilityReport is_d_admissible(std::span<const Point> points, std::uint32_t b, std::int64_t d) {
  return scan_pairs(points, b, Form::kSequence, -d);
}

AdmissibilityReport is_d_admissible_net(std::span<const Point> points, std::uint32_t b, std::int64_t d,
                                        std::size_t m) {
  check_base(b);
  if (m > max_digits_u64(b) || points.size() != upow(b, m))
    throw UsageError("expected b^m points for the point-set admissibility test");
  return scan_pairs(points, b, Form::kPointSet, -static_cast<std::int64_t>(m) - d);
}

}  // namespace ldseq
