// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ldseq {

/// Description of a finite field F_b, b = p^k, in polynomial-basis form
/// GF(p)[x]/(modulus).
///
/// Elements are addressed by their *code*: the integer whose base-p digits
/// are the coefficient vector (constant term least significant). The digit
/// bijection Z_b -> F_b is the identity on codes, so phi(0) is the additive
/// identity and, for prime fields, phi is the canonical residue map.
///
/// Instances are cheap handles to immutable, shared arithmetic tables.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxOrder = 256;

  /// Built-in field of the given order. Prime powers p^k <= 64 use a fixed
  /// table of Conway moduli; primes up to kMaxOrder are always available.
  static FieldSpec of_order(std::uint32_t order);

  /// Prime field GF(p).
  static FieldSpec prime(std::uint32_t p);

  /// GF(p)[x]/(modulus). `modulus` lists coefficients constant term first and
  /// must be monic and irreducible over GF(p), degree >= 1.
  static FieldSpec extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  /// Accepts "7", "GF(7)", "GF(4)" or "GF(4)=GF(2)[x]/(x^2+x+1)".
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const noexcept;
  std::uint32_t degree() const noexcept;
  std::uint32_t order() const noexcept;

  /// Modulus coefficients, constant term first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept;

  // Arithmetic on raw element codes in [0, order()). Unchecked.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  /// Throws DomainError for a == 0.
  std::uint32_t inv(std::uint32_t a) const;

  /// Coefficient vector (length k, constant term first) of an element code.
  std::vector<std::uint32_t> coefficients(std::uint32_t code) const;

  /// "GF(3)" or "GF(4)=GF(2)[x]/(x^2+x+1)".
  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

 /// Opaque lookup tables shared by every copy of a field.
  struct Tables;

 private:
  explicit FieldSpec(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

/// An element of F_b bound to its field.
class FieldElement {
 public:
  FieldElement(FieldSpec field, std::uint32_t code);

  static FieldElement zero(const FieldSpec& f) { return FieldElement(f, 0); }
  static FieldElement one(const FieldSpec& f) { return FieldElement(f, 1); }

  const FieldSpec& field() const noexcept { return field_; }
  std::uint32_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_.coefficients(code_); }

  FieldElement inv() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.code_ == b.code_ && a.field_ == b.field_;
  }

 private:
  FieldSpec field_;
  std::uint32_t code_;
};

/// Digit bijection Z_b -> F_b. Throws UsageError for d >= b.
FieldElement phi(const FieldSpec& field, std::uint32_t d);
std::uint32_t phi_inv(const FieldElement& e) noexcept;

bool is_prime(std::uint64_t n) noexcept;

}  // namespace ldseq
