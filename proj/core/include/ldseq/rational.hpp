// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ldseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1U) r *= b;
    b *= b;
    exp >>= 1U;
  }
  return r;
}

/// Saturating-free 64-bit power; callers guarantee the result fits.
constexpr std::uint64_t upow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ldseq
