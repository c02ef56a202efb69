// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/digits.hpp"
#include "ldseq/rational.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldseq {

/// Box corner gamma = (gamma_1, ..., gamma_s) in [0,1]^s, each coordinate a
/// base-b expansion 0.pre(period). The value 1 is stored as `whole`.
class GammaSpec {
 public:
  struct Coordinate {
    bool whole = false;
    std::vector<std::uint32_t> pre;
    std::vector<std::uint32_t> period;
  };

  /// Normalizes to canonical form: an all-(b-1) tail is carried into the
  /// preperiod, an all-zero period is dropped, trailing zeros of a finite
  /// expansion are trimmed and the period is made primitive with the shortest
  /// preperiod. UsageError on digits >= b.
  GammaSpec(std::uint32_t base, std::vector<Coordinate> coords);

  /// UsageError unless every value lies in [0, 1].
  static GammaSpec from_rationals(std::uint32_t base, const std::vector<Rational>& values);

  /// Comma separated coordinates, each "1", "0", "p/q" or a base-b digit
  /// expansion "0.d1d2(p1p2)" where the parenthesized digits repeat.
  /// Digits above 9 are written as letters. UsageError on malformed input.
  static GammaSpec parse(std::uint32_t base, std::string_view text);

  std::uint32_t base() const noexcept { return base_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  const Coordinate& coordinate(std::size_t i) const { return coords_.at(i); }

  /// Digit j (0-based) of coordinate i, unrolling the period. Not for `whole`.
  std::uint32_t digit(std::size_t i, std::size_t j) const;
  Rational value(std::size_t i) const;
  /// lambda([0, gamma)) = prod_i gamma_i.
  Rational volume() const;
  bool is_finite(std::size_t i) const;

  /// "0.0(01)" per coordinate, comma separated.
  std::string str() const;

 private:
  std::uint32_t base_;
  std::vector<Coordinate> coords_;
};

/// True iff every coordinate has a finite base-b expansion.
bool cond_check(const GammaSpec& gamma);

/// x < gamma_i, decided exactly. CertificationError when x is truncated and
/// the undecided tail matters.
bool less_than(const DigitString& x, const GammaSpec& gamma, std::size_t i);
bool in_box(const Point& x, const GammaSpec& gamma);

/// Delta([0, gamma), points) = #{n : x_n in [0, gamma)} - N lambda.
Rational delta(std::span<const Point> points, const GammaSpec& gamma);

struct DeltaProfile {
  struct Entry {
    std::size_t m = 0;
    std::uint64_t n_at_sup = 0;  // smallest N <= b^m attaining the sup
    Rational sup_abs_delta;
  };
  std::string sequence;
  std::string gamma;
  std::uint32_t base = 2;
  std::vector<Entry> entries;  // m = 0..m_max
};

/// sup_{1 <= N <= b^m} |Delta([0,gamma), x_0..x_{N-1})| for m = 0..m_max,
/// b = gamma.base(), in one streaming pass over the sequence.
DeltaProfile delta_profile(const PointSequence& seq, const GammaSpec& gamma, std::size_t m_max);

struct BoundedVerdict {
  bool bounded = false;  // profile constant on [m0, m_max]
  std::size_t m0 = 0;
  bool cond = false;
  bool anomaly = false;  // bounded != cond
};

/// Desk-scale proxy for boundedness with m0 = m_max / 2.
BoundedVerdict bounded_verdict(const DeltaProfile& profile, const GammaSpec& gamma);

struct StarDiscrepancy {
  Rational value;
  std::vector<Rational> corner;  // box corner attaining the sup
  bool closed = false;           // sup approached from the closed box [0, corner]
};

/// D*_N = sup_y |#{x_n in [0,y)}/N - lambda([0,y))|, exact over the critical
/// corners. Coordinates are taken at their stored (truncated) values.
/// UsageError unless 1 <= s <= 3 and 1 <= N <= 4096 (N <= 512 for s = 3).
StarDiscrepancy star_discrepancy_exact(std::span<const Point> points);

}  // namespace ldseq
