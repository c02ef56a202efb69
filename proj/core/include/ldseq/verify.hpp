// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/digits.hpp"
#include "ldseq/field.hpp"
#include "ldseq/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ldseq {

/// prod_i [a_i b^{-d_i}, (a_i + 1) b^{-d_i}).
struct ElementaryInterval {
  std::uint32_t base = 2;
  std::vector<std::uint64_t> a;
  std::vector<std::size_t> d;

  Rational volume() const;
  bool contains(const Point& x) const;
};

struct NetReport {
  std::size_t m = 0;
  std::size_t s = 0;
  std::uint32_t b = 2;
  std::size_t t = 0;  // claimed
  bool verified = false;
  std::optional<ElementaryInterval> violation;
  std::uint64_t violation_count = 0;  // points found in `violation`
  std::optional<std::size_t> exact_t;
};

/// Checks that every elementary interval of volume b^{t-m} holds exactly b^t
/// of the b^m points. Each coordinate must be a base-b digit string with at
/// least m digits; UsageError otherwise or when the point count is not b^m.
NetReport is_net(std::span<const Point> points, std::uint32_t b, std::size_t t, std::size_t m);

/// Smallest t in [0, m] for which is_net passes (binary search).
std::size_t exact_t_value(std::span<const Point> points, std::uint32_t b, std::size_t m);

/// Digit-wise x (+) y through F_b: v_j = phi^{-1}(phi(x_j) + phi(y_j)).
/// UsageError on base or length mismatch.
DigitString digit_shift(const FieldSpec& field, const DigitString& x, const DigitString& y);
/// x (-) y.
DigitString digit_unshift(const FieldSpec& field, const DigitString& x, const DigitString& y);
DigitString digit_negate(const FieldSpec& field, const DigitString& x);

/// ||x||_b = b^{-k-1} where x_{k+1} is the first nonzero digit.
struct BadicNorm {
  enum class Kind {
    kPower,           // exactly b^exponent
    kZero,            // the expansion is exactly zero
    kBelowPrecision,  // all stored digits zero, tail unknown: norm <= b^exponent
  };
  Kind kind = Kind::kZero;
  std::int64_t exponent = 0;
  std::uint32_t base = 2;

  bool certified_nonzero() const noexcept { return kind == Kind::kPower; }
  /// Exact value for kPower, 0 for kZero, the upper bound for kBelowPrecision.
  Rational value() const;
};

BadicNorm norm_b(const DigitString& x);

/// ||n||_b = b^k for n in [b^k, b^{k+1}); returns k. UsageError for n = 0.
std::size_t norm_b_int_exponent(std::uint64_t n, std::uint32_t b);
std::uint64_t norm_b_int(std::uint64_t n, std::uint32_t b);

/// Product norm prod_i ||x^(i) (-) y^(i)||_b of two points. The first
/// differing digit decides each factor, so no field is needed.
BadicNorm pair_norm(const Point& x, const Point& y, std::uint32_t b);

struct AdmissibilityReport {
  bool admissible = false;
  /// Minimum over pairs of the checked quantity, as b^min_exponent
  /// (or zero when `min_is_zero`).
  std::int64_t min_exponent = 0;
  bool min_is_zero = false;
  std::uint64_t worst_k = 0;
  std::uint64_t worst_n = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;

  Rational min_value(std::uint32_t b) const;
};

/// kappa_m = min_{0<=k<n<b^m} ||x_n (-) x_k||_b over the given prefix. The
/// report is admissible (weakly) iff kappa > 0. CertificationError when a
/// pair agrees on every stored digit but an expansion is inexact.
AdmissibilityReport weak_admissibility(std::span<const Point> points, std::uint32_t b);

/// Sequence form: inf_{n>k} ||n (-) k||_b ||x_n (-) x_k||_b >= b^{-d}, checked
/// over all pairs of the given prefix x_0, x_1, ...
AdmissibilityReport is_d_admissible(std::span<const Point> points, std::uint32_t b, std::int64_t d);

/// Point-set form: min_{k<n<b^m} ||x_n (-) x_k||_b > b^{-m-d} (strict).
AdmissibilityReport is_d_admissible_net(std::span<const Point> points, std::uint32_t b, std::int64_t d,
                                        std::size_t m);

}  // namespace ldseq
