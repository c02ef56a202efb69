// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/digits.hpp"

#include "ldseq/error.hpp"

#include <algorithm>

namespace ldseq {

DigitString::DigitString(std::uint32_t base, std::vector<std::uint32_t> digits, bool exact)
    : base_(base), digits_(std::move(digits)), exact_(exact) {
  if (base_ < 2) throw UsageError("digit base must be >= 2");
  for (std::uint32_t d : digits_)
    if (d >= base_) throw UsageError("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
}

DigitString::DigitString(std::vector<std::uint32_t> radices, std::vector<std::uint32_t> digits, bool exact)
    : radices_(std::move(radices)), digits_(std::move(digits)), exact_(exact) {
  if (radices_.size() < digits_.size()) throw UsageError("mixed-radix string has fewer radices than digits");
  radices_.resize(digits_.size());
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (radices_[j] < 2) throw UsageError("radix must be >= 2");
    if (digits_[j] >= radices_[j]) throw UsageError("digit out of range for its radix");
  }
}

bool DigitString::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](std::uint32_t d) { return d == 0; });
}

Rational DigitString::value() const {
  // Horner from the least significant digit: v = (d_j + v) / r_j.
  Rational v = 0;
  for (std::size_t j = digits_.size(); j-- > 0;) v = (v + digits_[j]) / radix(j);
  return v;
}

Rational DigitString::ulp() const {
  BigInt den = 1;
  for (std::size_t j = 0; j < digits_.size(); ++j) den *= radix(j);
  return Rational(BigInt(1), den);
}

double DigitString::approx() const noexcept {
  double v = 0.0;
  for (std::size_t j = digits_.size(); j-- > 0;) v = (v + digits_[j]) / radix(j);
  return v;
}

std::string DigitString::str() const {
  std::uint32_t max_radix = base_;
  for (std::uint32_t r : radices_) max_radix = std::max(max_radix, r);
  std::string s = "0.";
  if (max_radix <= 36) {
    for (std::uint32_t d : digits_) s += static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10));
  } else {
    s += '[';
    for (std::size_t j = 0; j < digits_.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(digits_[j]);
    }
    s += ']';
  }
  if (!exact_) s += '~';
  return s;
}

std::vector<Point> PointSequence::points(std::uint64_t begin, std::uint64_t count) const {
  std::vector<Point> out;
  out.reserve(count);
  for (std::uint64_t n = begin; n < begin + count; ++n) out.push_back(point(n));
  return out;
}

}  // namespace ldseq
