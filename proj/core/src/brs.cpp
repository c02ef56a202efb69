// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/brs.hpp"

#include "ldseq/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace ldseq {

namespace {

bool all_equal(const std::vector<std::uint32_t>& v, std::uint32_t d) {
  return std::all_of(v.begin(), v.end(), [d](std::uint32_t x) { return x == d; });
}

void canonicalize(GammaSpec::Coordinate& c, std::uint32_t b) {
  if (c.whole) {
    c.pre.clear();
    c.period.clear();
    return;
  }
  for (auto d : c.pre)
    if (d >= b) throw UsageError("gamma digit " + std::to_string(d) + " out of range for base " + std::to_string(b));
  for (auto d : c.period)
    if (d >= b) throw UsageError("gamma digit " + std::to_string(d) + " out of range for base " + std::to_string(b));

  if (!c.period.empty() && all_equal(c.period, b - 1)) {
    // 0.pre(b-1 repeating) = pre + one unit in its last place.
    c.period.clear();
    std::size_t j = c.pre.size();
    while (j > 0 && c.pre[j - 1] == b - 1) c.pre[--j] = 0;
    if (j == 0) {
      c.whole = true;
      c.pre.clear();
      return;
    }
    ++c.pre[j - 1];
  }
  if (all_equal(c.period, 0)) c.period.clear();
  if (c.period.empty()) {
    while (!c.pre.empty() && c.pre.back() == 0) c.pre.pop_back();
    return;
  }
  const std::size_t k = c.period.size();
  for (std::size_t q = 1; q < k; ++q) {
    if (k % q) continue;
    bool ok = true;
    for (std::size_t j = q; j < k && ok; ++j) ok = c.period[j] == c.period[j - q];
    if (ok) {
      c.period.resize(q);
      break;
    }
  }
  while (!c.pre.empty() && c.pre.back() == c.period.back()) {
    c.pre.pop_back();
    std::rotate(c.period.rbegin(), c.period.rbegin() + 1, c.period.rend());
  }
}

GammaSpec::Coordinate expand_rational(const Rational& q, std::uint32_t b) {
  GammaSpec::Coordinate c;
  if (q < 0 || q > 1) throw UsageError("gamma coordinate " + to_string(q) + " is outside [0, 1]");
  if (q == 1) {
    c.whole = true;
    return c;
  }
  const BigInt den = denominator(q);
  BigInt rem = numerator(q);
  std::map<BigInt, std::size_t> seen;
  std::vector<std::uint32_t> digits;
  while (rem != 0) {
    auto it = seen.find(rem);
    if (it != seen.end()) {
      c.pre.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      c.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return c;
    }
    seen.emplace(rem, digits.size());
    rem *= b;
    digits.push_back(static_cast<std::uint32_t>(rem / den));
    rem %= den;
  }
  c.pre = std::move(digits);
  return c;
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t e = s.size();
  while (a < e && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (e > a && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(a, e - a));
}

std::uint32_t parse_digit(char ch, std::uint32_t b, const std::string& text) {
  std::uint32_t d = 0;
  const auto u = static_cast<unsigned char>(ch);
  if (std::isdigit(u))
    d = static_cast<std::uint32_t>(ch - '0');
  else if (std::isalpha(u))
    d = static_cast<std::uint32_t>(std::tolower(u) - 'a') + 10;
  else
    throw UsageError("bad gamma '" + text + "'");
  if (d >= b) throw UsageError("digit '" + std::string(1, ch) + "' out of range for base " + std::to_string(b));
  return d;
}

GammaSpec::Coordinate parse_coordinate(const std::string& text, std::uint32_t b) {
  if (text.empty()) throw UsageError("empty gamma coordinate");
  if (text == "1") return expand_rational(Rational(1), b);
  if (text == "0") return {};
  if (auto slash = text.find('/'); slash != std::string::npos) {
    try {
      const BigInt p(trim(text.substr(0, slash)));
      const BigInt q(trim(text.substr(slash + 1)));
      if (q == 0) throw UsageError("zero denominator in gamma '" + text + "'");
      return expand_rational(Rational(p, q), b);
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const Error*>(&e) != nullptr) throw;
      throw UsageError("bad gamma '" + text + "'");
    }
  }
  if (text.size() < 2 || text[0] != '0' || text[1] != '.') throw UsageError("bad gamma '" + text + "'");
  GammaSpec::Coordinate c;
  std::size_t j = 2;
  for (; j < text.size() && text[j] != '('; ++j) c.pre.push_back(parse_digit(text[j], b, text));
  if (j < text.size()) {
    const auto close = text.find(')', j);
    if (close != text.size() - 1 || close == j + 1) throw UsageError("bad gamma period in '" + text + "'");
    for (++j; j < close; ++j) c.period.push_back(parse_digit(text[j], b, text));
  }
  return c;
}

char digit_char(std::uint32_t d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

// Sign of x - gamma_i when both are exact rationals or x is an interval.
bool less_than_rational(const DigitString& x, const GammaSpec& gamma, std::size_t i) {
  const Rational g = gamma.value(i);
  const Rational v = x.value();
  if (x.exact()) return v < g;
  if (v + x.ulp() <= g) return true;
  if (v >= g) return false;
  throw CertificationError("precision of " + x.str() + " cannot decide comparison with gamma_" + std::to_string(i + 1));
}

}  // namespace

GammaSpec::GammaSpec(std::uint32_t base, std::vector<Coordinate> coords) : base_(base), coords_(std::move(coords)) {
  if (base_ < 2) throw UsageError("gamma base must be at least 2");
  if (coords_.empty()) throw UsageError("gamma needs at least one coordinate");
  for (auto& c : coords_) canonicalize(c, base_);
}

GammaSpec GammaSpec::from_rationals(std::uint32_t base, const std::vector<Rational>& values) {
  if (base < 2) throw UsageError("gamma base must be at least 2");
  std::vector<Coordinate> cs;
  cs.reserve(values.size());
  for (const auto& q : values) cs.push_back(expand_rational(q, base));
  return GammaSpec(base, std::move(cs));
}

GammaSpec GammaSpec::parse(std::uint32_t base, std::string_view text) {
  if (base < 2) throw UsageError("gamma base must be at least 2");
  std::vector<Coordinate> cs;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    cs.push_back(parse_coordinate(trim(text.substr(start, comma - start)), base));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return GammaSpec(base, std::move(cs));
}

std::uint32_t GammaSpec::digit(std::size_t i, std::size_t j) const {
  const Coordinate& c = coords_.at(i);
  if (c.whole) throw UsageError("gamma_" + std::to_string(i + 1) + " = 1 has no fractional digits");
  if (j < c.pre.size()) return c.pre[j];
  if (c.period.empty()) return 0;
  return c.period[(j - c.pre.size()) % c.period.size()];
}

Rational GammaSpec::value(std::size_t i) const {
  const Coordinate& c = coords_.at(i);
  if (c.whole) return Rational(1);
  BigInt a = 0;
  for (auto d : c.pre) a = a * base_ + d;
  Rational v(a, ipow(base_, c.pre.size()));
  if (!c.period.empty()) {
    BigInt p = 0;
    for (auto d : c.period) p = p * base_ + d;
    v += Rational(p, ipow(base_, c.pre.size()) * (ipow(base_, c.period.size()) - 1));
  }
  return v;
}

Rational GammaSpec::volume() const {
  Rational v(1);
  for (std::size_t i = 0; i < coords_.size(); ++i) v *= value(i);
  return v;
}

bool GammaSpec::is_finite(std::size_t i) const {
  const Coordinate& c = coords_.at(i);
  return c.whole || c.period.empty();
}

std::string GammaSpec::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    const Coordinate& c = coords_[i];
    if (c.whole) {
      out += '1';
      continue;
    }
    if (c.pre.empty() && c.period.empty()) {
      out += '0';
      continue;
    }
    out += "0.";
    for (auto d : c.pre) out += digit_char(d);
    if (!c.period.empty()) {
      out += '(';
      for (auto d : c.period) out += digit_char(d);
      out += ')';
    }
  }
  return out;
}

bool cond_check(const GammaSpec& gamma) {
  for (std::size_t i = 0; i < gamma.dimension(); ++i)
    if (!gamma.is_finite(i)) return false;
  return true;
}

bool less_than(const DigitString& x, const GammaSpec& gamma, std::size_t i) {
  const auto& c = gamma.coordinate(i);
  if (c.whole) return true;
  if (!x.uniform() || x.base() != gamma.base()) return less_than_rational(x, gamma, i);
  const std::size_t len = x.size();
  for (std::size_t j = 0; j < len; ++j) {
    const std::uint32_t g = gamma.digit(i, j);
    if (x[j] != g) return x[j] < g;
  }
  // Equal on the stored digits; decide on the tails.
  bool gamma_tail_zero = c.period.empty();
  for (std::size_t j = len; j < c.pre.size() && gamma_tail_zero; ++j) gamma_tail_zero = c.pre[j] == 0;
  if (x.exact()) return !gamma_tail_zero;
  if (gamma_tail_zero) return false;
  throw CertificationError("precision of " + x.str() + " cannot decide comparison with gamma_" + std::to_string(i + 1));
}

bool in_box(const Point& x, const GammaSpec& gamma) {
  if (x.size() != gamma.dimension())
    throw UsageError("point dimension " + std::to_string(x.size()) + " does not match gamma dimension " +
                     std::to_string(gamma.dimension()));
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!less_than(x[i], gamma, i)) return false;
  return true;
}

Rational delta(std::span<const Point> points, const GammaSpec& gamma) {
  std::uint64_t count = 0;
  for (const auto& x : points)
    if (in_box(x, gamma)) ++count;
  return Rational(count) - Rational(static_cast<std::uint64_t>(points.size())) * gamma.volume();
}

DeltaProfile delta_profile(const PointSequence& seq, const GammaSpec& gamma, std::size_t m_max) {
  const std::uint32_t b = gamma.base();
  if (seq.dimension() != gamma.dimension()) throw UsageError("sequence and gamma dimensions differ");
  if (static_cast<double>(m_max) * std::log2(static_cast<double>(b)) > 40.0)
    throw UsageError("b^m_max exceeds 2^40 points");
  DeltaProfile prof;
  prof.sequence = seq.describe();
  prof.gamma = gamma.str();
  prof.base = b;

  // Delta(N) = (count * den - N * num) / den with lambda = num / den.
  const Rational lambda = gamma.volume();
  const BigInt num = numerator(lambda);
  const BigInt den = denominator(lambda);
  BigInt best = -1;
  std::uint64_t best_n = 0;
  std::uint64_t count = 0;
  std::uint64_t limit = 1;
  std::size_t m = 0;
  for (std::uint64_t n = 1;; ++n) {
    if (in_box(seq.point(n - 1), gamma)) ++count;
    BigInt d = BigInt(count) * den - BigInt(n) * num;
    if (d < 0) d = -d;
    if (d > best) {
      best = d;
      best_n = n;
    }
    while (n == limit) {
      prof.entries.push_back({m, best_n, Rational(best, den)});
      if (m == m_max) return prof;
      ++m;
      limit *= b;
    }
  }
}

BoundedVerdict bounded_verdict(const DeltaProfile& profile, const GammaSpec& gamma) {
  BoundedVerdict v;
  const std::size_t m_max = profile.entries.empty() ? 0 : profile.entries.back().m;
  v.m0 = m_max / 2;
  v.bounded = true;
  for (const auto& e : profile.entries)
    if (e.m >= v.m0 && e.sup_abs_delta != profile.entries.back().sup_abs_delta) v.bounded = false;
  v.cond = cond_check(gamma);
  v.anomaly = v.bounded != v.cond;
  return v;
}

StarDiscrepancy star_discrepancy_exact(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n == 0) throw UsageError("star discrepancy needs at least one point");
  const std::size_t s = points.front().size();
  if (s < 1 || s > 3) throw UsageError("star discrepancy supports 1 <= s <= 3, got s = " + std::to_string(s));
  const std::size_t cap = s == 3 ? 512 : 4096;
  if (n > cap)
    throw UsageError("star discrepancy supports N <= " + std::to_string(cap) + " for s = " + std::to_string(s));

  // Critical values per coordinate: the point coordinates and 1.
  std::vector<std::vector<Rational>> crit(s);
  std::vector<std::vector<double>> critd(s);
  std::vector<std::uint32_t> rank(n * s);
  {
    std::vector<Rational> vals(n * s);
    for (std::size_t k = 0; k < n; ++k) {
      if (points[k].size() != s) throw UsageError("points have inconsistent dimensions");
      for (std::size_t i = 0; i < s; ++i) vals[k * s + i] = points[k][i].value();
    }
    for (std::size_t i = 0; i < s; ++i) {
      auto& c = crit[i];
      for (std::size_t k = 0; k < n; ++k) c.push_back(vals[k * s + i]);
      c.emplace_back(1);
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (const auto& q : c) critd[i].push_back(to_double(q));
      for (std::size_t k = 0; k < n; ++k)
        rank[k * s + i] =
            static_cast<std::uint32_t>(std::lower_bound(c.begin(), c.end(), vals[k * s + i]) - c.begin());
    }
  }

  // Visits every corner with its open and closed box counts.
  auto visit = [&](auto&& f) {
    const std::size_t lead = s - 1;
    std::vector<std::size_t> idx(lead, 0);
    const auto& last = crit[s - 1];
    std::vector<std::uint32_t> cnt_open(last.size());
    std::vector<std::uint32_t> cnt_closed(last.size());
    while (true) {
      std::fill(cnt_open.begin(), cnt_open.end(), 0U);
      std::fill(cnt_closed.begin(), cnt_closed.end(), 0U);
      for (std::size_t k = 0; k < n; ++k) {
        bool open = true;
        bool closed = true;
        for (std::size_t i = 0; i < lead; ++i) {
          const auto r = rank[k * s + i];
          open = open && r < idx[i];
          closed = closed && r <= idx[i];
        }
        if (open) ++cnt_open[rank[k * s + lead]];
        if (closed) ++cnt_closed[rank[k * s + lead]];
      }
      std::uint64_t acc_open = 0;
      std::uint64_t acc_closed = 0;
      for (std::size_t c = 0; c < last.size(); ++c) {
        acc_closed += cnt_closed[c];
        f(idx, c, acc_open, acc_closed);
        acc_open += cnt_open[c];
      }
      std::size_t i = 0;
      while (i < lead && ++idx[i] == crit[i].size()) idx[i++] = 0;
      if (i == lead) return;
    }
  };

  const double nd = static_cast<double>(n);
  auto volume_d = [&](const std::vector<std::size_t>& idx, std::size_t c) {
    double v = critd[s - 1][c];
    for (std::size_t i = 0; i + 1 < s; ++i) v *= critd[i][idx[i]];
    return v;
  };
  double best = -1.0;
  visit([&](const std::vector<std::size_t>& idx, std::size_t c, std::uint64_t open, std::uint64_t closed) {
    const double lam = volume_d(idx, c);
    best = std::max({best, lam - static_cast<double>(open) / nd, static_cast<double>(closed) / nd - lam});
  });

  // Floating error is far below this margin; candidates are re-evaluated exactly.
  constexpr double kMargin = 1e-9;
  StarDiscrepancy out;
  out.value = -1;
  visit([&](const std::vector<std::size_t>& idx, std::size_t c, std::uint64_t open, std::uint64_t closed) {
    const double lam = volume_d(idx, c);
    const double vo = lam - static_cast<double>(open) / nd;
    const double vc = static_cast<double>(closed) / nd - lam;
    if (std::max(vo, vc) < best - kMargin) return;
    Rational lambda = crit[s - 1][c];
    for (std::size_t i = 0; i + 1 < s; ++i) lambda *= crit[i][idx[i]];
    auto consider = [&](const Rational& v, bool is_closed) {
      if (v <= out.value) return;
      out.value = v;
      out.closed = is_closed;
      out.corner.clear();
      for (std::size_t i = 0; i + 1 < s; ++i) out.corner.push_back(crit[i][idx[i]]);
      out.corner.push_back(crit[s - 1][c]);
    };
    if (vo >= best - kMargin) consider(lambda - Rational(open, n), false);
    if (vc >= best - kMargin) consider(Rational(closed, n) - lambda, true);
  });
  return out;
}

}  // namespace ldseq
