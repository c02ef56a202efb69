// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/poly.hpp"

#include "ldseq/error.hpp"
#include "poly_text.hpp"

#include <algorithm>

namespace ldseq {
namespace {

void require_same(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field()))
    throw UsageError("mixed fields: " + a.field().describe() + " vs " + b.field().describe());
}

}  // namespace

Poly::Poly(FieldSpec field, std::vector<std::uint32_t> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (std::uint32_t c : c_)
    if (c >= field_.order()) throw UsageError("coefficient out of range for " + field_.describe());
  normalize();
}

void Poly::normalize() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldSpec& field, std::uint32_t code) { return Poly(field, {code}); }

Poly Poly::monomial(const FieldSpec& field, std::uint32_t degree, std::uint32_t code) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = code;
  return Poly(field, std::move(c));
}

Poly Poly::from_index(const FieldSpec& field, std::uint64_t n) {
  const std::uint64_t b = field.order();
  std::vector<std::uint32_t> c;
  while (n) {
    c.push_back(static_cast<std::uint32_t>(n % b));
    n /= b;
  }
  return Poly(field, std::move(c));
}

Poly Poly::parse(const FieldSpec& field, std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[') return Poly(field, detail::parse_digit_vector(text));
  Poly out(field);
  for (const detail::Term& t : detail::parse_terms(text)) {
    if (t.coef >= field.order())
      throw UsageError("coefficient " + std::to_string(t.coef) + " is not a digit of base " +
                       std::to_string(field.order()) + " in '" + std::string(text) + "'");
    std::uint32_t code = static_cast<std::uint32_t>(t.coef);
    if (t.negative) code = field.neg(code);
    out = out + monomial(field, t.exp, code);
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(lead()));
}

std::string Poly::str() const {
  if (field_.degree() == 1) return detail::format_terms(c_);
  if (c_.empty()) return "[0]";
  std::string s = "[";
  for (std::size_t i = c_.size(); i-- > 0;) {
    s += std::to_string(c_[i]);
    if (i) s += ',';
  }
  return s + "]";
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b);
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
  Poly r(a.field_);
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b);
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  Poly r(a.field_);
  r.c_ = std::move(c);
  r.normalize();
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  Poly r(a.field_);
  if (a.is_zero() || b.is_zero()) return r;
  const FieldSpec& f = a.field_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = f.add(r.c_[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  r.normalize();
  return r;
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly Poly::scaled(std::uint32_t code) const {
  Poly r(field_);
  if (code == 0) return r;
  r.c_ = c_;
  for (auto& c : r.c_) c = field_.mul(c, code);
  return r;
}

Poly Poly::shifted(std::uint32_t by) const {
  Poly r(field_);
  if (is_zero()) return r;
  r.c_.assign(by, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = constant(field_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  require_same(f, g);
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  const FieldSpec& field = f.field();
  if (f.degree() < g.degree()) return {Poly(field), f};
  std::vector<std::uint32_t> r = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  std::vector<std::uint32_t> q(r.size() - dg, 0);
  const std::uint32_t lead_inv = field.inv(g.lead());
  for (std::size_t i = r.size(); i-- > dg;) {
    const std::uint32_t coef = field.mul(r[i], lead_inv);
    if (coef == 0) continue;
    const std::size_t shift = i - dg;
    q[shift] = coef;
    for (std::size_t j = 0; j <= dg; ++j) r[shift + j] = field.sub(r[shift + j], field.mul(coef, g.coeffs()[j]));
  }
  r.resize(dg);
  return {Poly(field, std::move(q)), Poly(field, std::move(r))};
}

Poly gcd(const Poly& f, const Poly& g) {
  require_same(f, g);
  Poly a = f;
  Poly b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool coprime(const Poly& f, const Poly& g) { return gcd(f, g).degree() == 0; }

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw UsageError("irreducibility is undefined for constant polynomial " + f.str());
  const FieldSpec& field = f.field();
  const std::uint32_t b = field.order();
  const int n = f.degree();
  if (n == 1) return true;
  if (n <= 3) {
    // A reducible polynomial of degree 2 or 3 has a linear factor.
    for (std::uint32_t x = 0; x < b; ++x) {
      std::uint32_t acc = 0;
      for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = field.add(field.mul(acc, x), f.coeffs()[i]);
      if (acc == 0) return false;
    }
    return true;
  }
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= b;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1, 0);
      std::uint64_t v = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % b);
        v /= b;
      }
      c[static_cast<std::size_t>(d)] = 1;
      if ((f % Poly(field, std::move(c))).is_zero()) return false;
    }
  }
  return true;
}

LaurentTail::LaurentTail(const Poly& f, const Poly& g) : den_(g) {
  require_same(f, g);
  if (g.is_zero()) throw DomainError("Laurent expansion with zero denominator");
  if (f.degree() >= g.degree())
    throw UsageError("Laurent expansion needs deg(numerator) < deg(denominator); reduce " + f.str() + " modulo " +
                     g.str() + " first");
  lead_inv_ = g.field().inv(g.lead());
  rem_.assign(static_cast<std::size_t>(g.degree()), 0);
  std::copy(f.coeffs().begin(), f.coeffs().end(), rem_.begin());
}

void LaurentTail::extend(std::size_t length) {
  const FieldSpec& field = den_.field();
  const std::size_t dg = rem_.size();
  const auto& g = den_.coeffs();
  a_.reserve(length);
  if (dg == 0) {
    a_.resize(std::max(length, a_.size()), 0);
    return;
  }
  while (a_.size() < length) {
    // rem * x has degree <= dg; its x^dg coefficient is rem[dg-1].
    const std::uint32_t top = rem_[dg - 1];
    const std::uint32_t a = field.mul(top, lead_inv_);
    for (std::size_t i = dg - 1; i > 0; --i) rem_[i] = field.sub(rem_[i - 1], field.mul(a, g[i]));
    rem_[0] = field.sub(0, field.mul(a, g[0]));
    a_.push_back(a);
  }
}

bool LaurentTail::exhausted() const noexcept {
  return std::all_of(rem_.begin(), rem_.end(), [](std::uint32_t c) { return c == 0; });
}

LaurentTail laurent_expand(const Poly& f, const Poly& g, std::size_t length) {
  if (length == 0) throw UsageError("Laurent expansion length must be >= 1");
  LaurentTail t(f, g);
  t.extend(length);
  return t;
}

}  // namespace ldseq
