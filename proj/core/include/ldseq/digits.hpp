// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ldseq {

/// A point coordinate in [0,1) as an exact positional digit string
///   x = d_1/r_1 + d_2/(r_1 r_2) + ... + d_L/(r_1 ... r_L)
/// with either a uniform radix b or a mixed (Cantor) radix list.
///
/// `exact()` records whether every digit past position L is known to be
/// zero. Digital-sequence coordinates are generally infinite expansions cut at
/// L digits; their tail is unknown and comparisons that depend on it must
/// be certified rather than guessed.
class DigitString {
 public:
  DigitString() = default;
  DigitString(std::uint32_t base, std::vector<std::uint32_t> digits, bool exact);
  /// Mixed radix; `radices` must have at least as many entries as `digits`.
  DigitString(std::vector<std::uint32_t> radices, std::vector<std::uint32_t> digits, bool exact);

  bool uniform() const noexcept { return radices_.empty(); }
  /// Uniform base, or 0 for mixed radix strings.
  std::uint32_t base() const noexcept { return base_; }
  std::uint32_t radix(std::size_t j) const noexcept { return radices_.empty() ? base_ : radices_[j]; }
  const std::vector<std::uint32_t>& radices() const noexcept { return radices_; }

  std::size_t size() const noexcept { return digits_.size(); }
  std::uint32_t operator[](std::size_t j) const noexcept { return digits_[j]; }
  std::uint32_t digit_or_zero(std::size_t j) const noexcept { return j < digits_.size() ? digits_[j] : 0; }
  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
  bool exact() const noexcept { return exact_; }
  bool is_zero() const noexcept;

  Rational value() const;
  /// Weight of the last stored digit position, 1/(r_1 ... r_L).
  Rational ulp() const;
  double approx() const noexcept;

  /// "0.0110" for radices up to 36 (digits 0-9a-z), "0.[12,0,7]" otherwise.
  /// A trailing "~" marks an inexact (truncated) expansion.
  std::string str() const;

  friend bool operator==(const DigitString& a, const DigitString& b) noexcept {
    return a.base_ == b.base_ && a.radices_ == b.radices_ && a.digits_ == b.digits_ && a.exact_ == b.exact_;
  }

 private:
  std::uint32_t base_ = 0;
  std::vector<std::uint32_t> radices_;
  std::vector<std::uint32_t> digits_;
  bool exact_ = true;
};

using Point = std::vector<DigitString>;

/// A deterministic infinite point sequence in [0,1)^s.
class PointSequence {
 public:
  virtual ~PointSequence() = default;
  virtual std::size_t dimension() const = 0;
  virtual Point point(std::uint64_t n) const = 0;
  virtual std::string describe() const = 0;

  /// Points n = begin, ..., begin + count - 1.
  std::vector<Point> points(std::uint64_t begin, std::uint64_t count) const;
};

}  // namespace ldseq
