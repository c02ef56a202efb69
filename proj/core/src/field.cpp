// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/field.hpp"

#include "ldseq/error.hpp"
#include "poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <utility>

namespace ldseq {

struct FieldSpec::Tables {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t b = 0;
  std::vector<std::uint32_t> modulus;  // constant first, monic; empty for k == 1
  std::vector<std::uint32_t> add;      // b*b
  std::vector<std::uint32_t> mul;      // b*b
  std::vector<std::uint32_t> neg;      // b
  std::vector<std::uint32_t> inv;      // b, inv[0] unused
};

namespace {

// Conway polynomials, constant term first.
const std::map<std::uint32_t, std::pair<std::uint32_t, std::vector<std::uint32_t>>>& conway_table() {
  static const std::map<std::uint32_t, std::pair<std::uint32_t, std::vector<std::uint32_t>>> table = {
      {4, {2, {1, 1, 1}}},
      {8, {2, {1, 1, 0, 1}}},
      {16, {2, {1, 1, 0, 0, 1}}},
      {32, {2, {1, 0, 1, 0, 0, 1}}},
      {64, {2, {1, 1, 0, 1, 1, 0, 1}}},
      {9, {3, {2, 2, 1}}},
      {27, {3, {1, 2, 0, 1}}},
      {25, {5, {2, 4, 1}}},
      {49, {7, {3, 6, 1}}},
  };
  return table;
}

using SmallPoly = std::vector<std::uint32_t>;  // over Z_p, constant first

void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic m over Z_p.
SmallPoly rem_monic(SmallPoly a, const SmallPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool irreducible_over_prime(const SmallPoly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      SmallPoly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (rem_monic(f, g, p).empty()) return false;
    }
  }
  return true;
}

SmallPoly code_to_poly(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
  SmallPoly c(k, 0);
  for (std::uint32_t i = 0; i < k; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

std::uint32_t poly_to_code(const SmallPoly& c, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

std::shared_ptr<FieldSpec::Tables> build_tables(std::uint32_t p, SmallPoly modulus) {
  auto t = std::make_shared<FieldSpec::Tables>();
  t->p = p;
  t->k = modulus.empty() ? 1 : static_cast<std::uint32_t>(modulus.size() - 1);
  t->b = 1;
  for (std::uint32_t i = 0; i < t->k; ++i) t->b *= p;
  t->modulus = std::move(modulus);
  const std::uint32_t b = t->b;
  t->add.resize(static_cast<std::size_t>(b) * b);
  t->mul.resize(static_cast<std::size_t>(b) * b);
  t->neg.resize(b);
  t->inv.assign(b, 0);
  for (std::uint32_t x = 0; x < b; ++x) {
    const SmallPoly px = code_to_poly(x, p, t->k);
    SmallPoly nx(t->k);
    for (std::uint32_t i = 0; i < t->k; ++i) nx[i] = (p - px[i]) % p;
    t->neg[x] = poly_to_code(nx, p);
    for (std::uint32_t y = 0; y < b; ++y) {
      const SmallPoly py = code_to_poly(y, p, t->k);
      SmallPoly s(t->k);
      for (std::uint32_t i = 0; i < t->k; ++i) s[i] = (px[i] + py[i]) % p;
      t->add[static_cast<std::size_t>(x) * b + y] = poly_to_code(s, p);
      SmallPoly prod(2 * t->k - 1, 0);
      for (std::uint32_t i = 0; i < t->k; ++i)
        for (std::uint32_t j = 0; j < t->k; ++j) prod[i + j] = (prod[i + j] + px[i] * py[j]) % p;
      if (t->k > 1) prod = rem_monic(prod, t->modulus, p);
      prod.resize(t->k, 0);
      t->mul[static_cast<std::size_t>(x) * b + y] = poly_to_code(prod, p);
    }
  }
  for (std::uint32_t x = 1; x < b; ++x)
    for (std::uint32_t y = 1; y < b; ++y)
      if (t->mul[static_cast<std::size_t>(x) * b + y] == 1) {
        t->inv[x] = y;
        break;
      }
  return t;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw UsageError("GF(" + std::to_string(p) + "): characteristic must be prime");
  if (p > kMaxOrder) throw UsageError("field order " + std::to_string(p) + " exceeds supported maximum");
  static std::map<std::uint32_t, std::shared_ptr<const Tables>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto& slot = cache[p];
  if (!slot) slot = build_tables(p, {});
  return FieldSpec(slot);
}

FieldSpec FieldSpec::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw UsageError("GF(" + std::to_string(p) + "): characteristic must be prime");
  trim(modulus);
  if (modulus.size() < 2) throw UsageError("field modulus must have degree >= 1");
  for (std::uint32_t c : modulus)
    if (c >= p) throw UsageError("modulus coefficient out of range for GF(" + std::to_string(p) + ")");
  if (modulus.back() != 1) throw UsageError("field modulus must be monic");
  if (modulus.size() == 2) return prime(p);
  std::uint64_t order = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    order *= p;
    if (order > kMaxOrder) throw UsageError("field order exceeds supported maximum " + std::to_string(kMaxOrder));
  }
  if (!irreducible_over_prime(modulus, p))
    throw UsageError("modulus " + detail::format_terms(modulus) + " is reducible over GF(" + std::to_string(p) + ")");
  return FieldSpec(build_tables(p, std::move(modulus)));
}

FieldSpec FieldSpec::of_order(std::uint32_t order) {
  if (is_prime(order)) return prime(order);
  const auto& table = conway_table();
  auto it = table.find(order);
  if (it == table.end())
    throw UsageError("no built-in field of order " + std::to_string(order) +
                     "; give an explicit modulus, e.g. GF(q)=GF(p)[x]/(...)");
  static std::map<std::uint32_t, FieldSpec> cache;
  static std::mutex mu;
  {
    std::lock_guard lock(mu);
    auto hit = cache.find(order);
    if (hit != cache.end()) return hit->second;
  }
  FieldSpec f = extension(it->second.first, it->second.second);
  std::lock_guard lock(mu);
  cache.emplace(order, f);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto parse_uint = [&](const std::string& digits) -> std::uint32_t {
    if (digits.empty() || digits.size() > 9 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw UsageError("malformed field description '" + std::string(text) + "'");
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  if (!s.empty() && std::isdigit(static_cast<unsigned char>(s[0]))) return of_order(parse_uint(s));
  if (s.rfind("GF(", 0) != 0) throw UsageError("malformed field description '" + std::string(text) + "'");
  const std::size_t close = s.find(')');
  if (close == std::string::npos) throw UsageError("malformed field description '" + std::string(text) + "'");
  const std::uint32_t q = parse_uint(s.substr(3, close - 3));
  if (close + 1 == s.size()) return of_order(q);
  // GF(q)=GF(p)[x]/(modulus)
  const std::string rest = s.substr(close + 1);
  if (rest.rfind("=GF(", 0) != 0) throw UsageError("malformed field description '" + std::string(text) + "'");
  const std::size_t pclose = rest.find(')');
  const std::uint32_t p = parse_uint(rest.substr(4, pclose - 4));
  const std::string tail = rest.substr(pclose + 1);
  if (tail.rfind("[x]/(", 0) != 0 || tail.back() != ')')
    throw UsageError("malformed field description '" + std::string(text) + "'");
  const std::string poly = tail.substr(5, tail.size() - 6);
  FieldSpec f = extension(p, detail::terms_mod_p(detail::parse_terms(poly), p));
  if (f.order() != q)
    throw UsageError("field description '" + std::string(text) + "': modulus degree does not give order " +
                     std::to_string(q));
  return f;
}

std::uint32_t FieldSpec::characteristic() const noexcept { return t_->p; }
std::uint32_t FieldSpec::degree() const noexcept { return t_->k; }
std::uint32_t FieldSpec::order() const noexcept { return t_->b; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return t_->modulus; }

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const noexcept {
  return t_->add[static_cast<std::size_t>(a) * t_->b + b];
}
std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, t_->neg[b]); }
std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  return t_->mul[static_cast<std::size_t>(a) * t_->b + b];
}
std::uint32_t FieldSpec::neg(std::uint32_t a) const noexcept { return t_->neg[a]; }
std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in " + describe());
  return t_->inv[a];
}

std::vector<std::uint32_t> FieldSpec::coefficients(std::uint32_t code) const {
  return code_to_poly(code, t_->p, t_->k);
}

std::string FieldSpec::describe() const {
  std::string s = "GF(" + std::to_string(t_->b) + ")";
  if (t_->k > 1) s += "=GF(" + std::to_string(t_->p) + ")[x]/(" + detail::format_terms(t_->modulus) + ")";
  return s;
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  if (a.t_ == b.t_) return true;
  return a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus;
}

FieldElement::FieldElement(FieldSpec field, std::uint32_t code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_.order()) throw UsageError("element code out of range for " + field_.describe());
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw UsageError("mixed fields: " + a.field().describe() + " vs " + b.field().describe());
}
}  // namespace

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(code_)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.add(a.code_, b.code_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.sub(a.code_, b.code_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.mul(a.code_, b.code_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return FieldElement(a.field_, a.field_.mul(a.code_, a.field_.inv(b.code_)));
}
FieldElement operator-(const FieldElement& a) { return FieldElement(a.field_, a.field_.neg(a.code_)); }

FieldElement phi(const FieldSpec& field, std::uint32_t d) {
  if (d >= field.order())
    throw UsageError("digit " + std::to_string(d) + " out of range for base " + std::to_string(field.order()));
  return FieldElement(field, d);
}

std::uint32_t phi_inv(const FieldElement& e) noexcept { return e.code(); }

}  // namespace ldseq
