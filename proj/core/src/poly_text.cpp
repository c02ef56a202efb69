// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "poly_text.hpp"

#include "ldseq/error.hpp"

#include <cctype>

namespace ldseq::detail {
namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

bool read_uint(const std::string& s, std::size_t& pos, std::uint64_t& value) {
  std::size_t start = pos;
  value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    if (value > (UINT64_MAX - 9) / 10) throw UsageError("polynomial coefficient too large");
    value = value * 10 + static_cast<std::uint64_t>(s[pos] - '0');
    ++pos;
  }
  return pos > start;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw UsageError("empty polynomial");
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    Term t;
    if (s[pos] == '+' || s[pos] == '-') {
      t.negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw UsageError("malformed polynomial '" + std::string(text) + "'");
    }
    first = false;
    std::uint64_t c = 0;
    bool has_coef = read_uint(s, pos, c);
    if (has_coef) t.coef = c;
    if (pos < s.size() && s[pos] == '*') {
      if (!has_coef) throw UsageError("malformed polynomial '" + std::string(text) + "'");
      ++pos;
      if (pos >= s.size() || s[pos] != 'x') throw UsageError("expected 'x' after '*' in '" + std::string(text) + "'");
    }
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      t.exp = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::uint64_t e = 0;
        if (!read_uint(s, pos, e) || e > 4096) throw UsageError("bad exponent in '" + std::string(text) + "'");
        t.exp = static_cast<std::uint32_t>(e);
      }
    } else if (!has_coef) {
      throw UsageError("malformed polynomial '" + std::string(text) + "'");
    }
    terms.push_back(t);
  }
  return terms;
}

std::vector<std::uint32_t> parse_digit_vector(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw UsageError("digit-vector polynomial must look like [c_k,...,c_0]: '" + std::string(text) + "'");
  std::vector<std::uint32_t> high_first;
  std::size_t pos = 1;
  while (pos < s.size() - 1) {
    std::uint64_t v = 0;
    if (!read_uint(s, pos, v) || v > UINT32_MAX) throw UsageError("bad digit in '" + std::string(text) + "'");
    high_first.push_back(static_cast<std::uint32_t>(v));
    if (pos < s.size() - 1) {
      if (s[pos] != ',') throw UsageError("expected ',' in '" + std::string(text) + "'");
      ++pos;
    }
  }
  if (high_first.empty()) throw UsageError("empty digit vector");
  return {high_first.rbegin(), high_first.rend()};
}

std::vector<std::uint32_t> terms_mod_p(const std::vector<Term>& terms, std::uint32_t p) {
  std::vector<std::uint32_t> c;
  for (const Term& t : terms) {
    if (c.size() <= t.exp) c.resize(t.exp + 1, 0);
    std::uint32_t v = static_cast<std::uint32_t>(t.coef % p);
    if (t.negative) v = (p - v) % p;
    c[t.exp] = (c[t.exp] + v) % p;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

std::string format_terms(const std::vector<std::uint32_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::uint32_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ldseq::detail
