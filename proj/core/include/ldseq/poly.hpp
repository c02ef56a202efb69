// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/field.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldseq {

/// Univariate polynomial over F_b. Coefficients are element codes, constant
/// term first, with no trailing zeros; the zero polynomial has no
/// coefficients and degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Poly(FieldSpec field) : field_(std::move(field)) {}
  Poly(FieldSpec field, std::vector<std::uint32_t> coeffs);

  static Poly constant(const FieldSpec& field, std::uint32_t code);
  static Poly monomial(const FieldSpec& field, std::uint32_t degree, std::uint32_t code = 1);

  /// v_n(x) = sum_r phi(a_r(n)) x^r for the base-b digits a_r(n) of n.
  static Poly from_index(const FieldSpec& field, std::uint64_t n);

  /// Parses "x^2+x+1" (coefficients are digit codes, '-' negates) or the
  /// digit-vector form "[c_k,...,c_0]". Throws UsageError on malformed text.
  static Poly parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint32_t coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
  std::uint32_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return lead() == 1; }
  Poly monic() const;

  /// Prime fields use the term grammar, extension fields the digit-vector
  /// grammar. Either form parses back to the same polynomial.
  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.c_ == b.c_ && a.field_ == b.field_;
  }

  Poly scaled(std::uint32_t code) const;
  Poly shifted(std::uint32_t by) const;  // x^by * this
  Poly pow(std::uint32_t e) const;

 private:
  void normalize() noexcept;
  FieldSpec field_;
  std::vector<std::uint32_t> c_;
};

/// Euclidean division f = q*g + r with deg r < deg g. DomainError if g == 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
Poly gcd(const Poly& f, const Poly& g);

bool coprime(const Poly& f, const Poly& g);

/// Trial division by all monic polynomials of degree <= deg(f)/2. Degrees 2
/// and 3 take the root-search fast path. UsageError for constants.
bool is_irreducible(const Poly& f);

/// Coefficient stream a(0), a(1), ... of f/g = sum_{r>=0} a(r) x^{-r-1},
/// produced by long division in descending powers and extendable in place.
class LaurentTail {
 public:
  LaurentTail(const Poly& f, const Poly& g);

  const FieldSpec& field() const noexcept { return den_.field(); }
  /// Index of the first stored coefficient; expansions here always start at r = 0.
  int valuation() const noexcept { return 0; }
  std::size_t size() const noexcept { return a_.size(); }
  std::uint32_t operator[](std::size_t r) const noexcept { return a_[r]; }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return a_; }

  /// Grows the stream to at least `length` coefficients; existing entries
  /// are never changed.
  void extend(std::size_t length);

  /// True when the running remainder is zero, i.e. all further coefficients vanish.
  bool exhausted() const noexcept;

 private:
  Poly den_;
  std::uint32_t lead_inv_ = 0;
  std::vector<std::uint32_t> rem_;  // length deg(den), constant first
  std::vector<std::uint32_t> a_;
};

/// UsageError when deg f >= deg g or length == 0; DomainError when g == 0.
LaurentTail laurent_expand(const Poly& f, const Poly& g, std::size_t length);

}  // namespace ldseq
