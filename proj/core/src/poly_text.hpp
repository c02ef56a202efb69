// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

// Shared tokenizer for the polynomial text grammars. Internal header.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ldseq::detail {

struct Term {
  std::uint64_t coef = 1;
  std::uint32_t exp = 0;
  bool negative = false;
};

/// Splits "2x^3 + x - 1" into signed monomials. Coefficients are integers,
/// an optional '*' may separate coefficient and variable. Throws UsageError.
std::vector<Term> parse_terms(std::string_view text);

/// Parses "[c_k,...,c_0]" into codes, constant term first. Throws UsageError.
std::vector<std::uint32_t> parse_digit_vector(std::string_view text);

/// Collects terms into a dense coefficient vector over Z_p (prime p only),
/// constant term first, trailing zeros removed.
std::vector<std::uint32_t> terms_mod_p(const std::vector<Term>& terms, std::uint32_t p);

/// Renders coefficients (constant first) as "x^2+2x+1"; "0" for empty.
std::string format_terms(const std::vector<std::uint32_t>& coeffs);

}  // namespace ldseq::detail
