// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/error.hpp"
#include "ldseq/poly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ldseq;

namespace {

Poly random_poly(const FieldSpec& f, int deg, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg + 1));
  for (auto& x : c) x = pick(rng);
  return Poly(f, c);
}

// Every monic polynomial of degree 1..n over f.
std::vector<Poly> monic_upto(const FieldSpec& f, int n) {
  std::vector<Poly> out;
  for (int d = 1; d <= n; ++d) {
    const std::uint64_t count = upow(f.order(), static_cast<std::uint64_t>(d));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1);
      std::uint64_t v = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % f.order());
        v /= f.order();
      }
      c.back() = 1;
      out.emplace_back(f, c);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial arithmetic examples") {
  const auto f2 = FieldSpec::prime(2);
  const Poly a = Poly::parse(f2, "x+1");
  CHECK((a * a).str() == "x^2+1");
  const Poly g = Poly::parse(f2, "x^2+x+1");
  CHECK(gcd(a, g) == Poly::constant(f2, 1));
  CHECK(coprime(a, g));
  auto [q, r] = divmod(g, Poly::constant(f2, 1));
  CHECK(q == g);
  CHECK(r.is_zero());
}

TEST_CASE("gcd agrees with exhaustive common-divisor search") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2U, 3U}) {
    const auto f = FieldSpec::prime(p);
    const auto divisors = monic_upto(f, 3);
    for (int k = 0; k < 60; ++k) {
      const Poly a = random_poly(f, 4, rng);
      const Poly b = random_poly(f, 3, rng);
      if (a.is_zero() || b.is_zero()) continue;
      const Poly g = gcd(a, b);
      CHECK(g.is_monic());
      CHECK((a % g).is_zero());
      CHECK((b % g).is_zero());
      // No common divisor of larger degree exists.
      for (const auto& d : divisors)
        if ((a % d).is_zero() && (b % d).is_zero()) CHECK(d.degree() <= g.degree());
    }
  }
}

TEST_CASE("Euclidean division contract") {
  std::mt19937 rng(11);
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 9U}) {
    const auto f = FieldSpec::of_order(q);
    for (int k = 0; k < 100; ++k) {
      const Poly a = random_poly(f, 6, rng);
      Poly b = random_poly(f, 3, rng);
      if (b.is_zero()) b = Poly::constant(f, 1);
      auto [quo, rem] = divmod(a, b);
      CHECK(quo * b + rem == a);
      CHECK(rem.degree() < b.degree());
    }
  }
}

TEST_CASE("irreducibility") {
  const auto f2 = FieldSpec::prime(2);
  const auto f3 = FieldSpec::prime(3);
  CHECK(is_irreducible(Poly::parse(f2, "x^2+x+1")));
  CHECK_FALSE(is_irreducible(Poly::parse(f2, "x^2+1")));
  CHECK(is_irreducible(Poly::parse(f3, "x^2+1")));
  CHECK_THROWS_AS(is_irreducible(Poly::constant(f2, 1)), UsageError);
  for (std::uint32_t p : {2U, 3U}) {
    const auto f = FieldSpec::prime(p);
    for (const auto& poly : monic_upto(f, p == 2 ? 6 : 4)) {
      CAPTURE(poly.str());
      CHECK(is_irreducible(poly) == oracle::irreducible_exhaustive(poly.coeffs(), p));
    }
  }
}

TEST_CASE("Laurent expansion multiplies back") {
  std::mt19937 rng(3);
  for (std::uint32_t q : {2U, 3U, 4U}) {
    const auto f = FieldSpec::of_order(q);
    for (int k = 0; k < 40; ++k) {
      Poly g = random_poly(f, 4, rng);
      if (g.degree() < 1) continue;
      const Poly num = random_poly(f, g.degree() - 1, rng);
      const std::size_t len = 20;
      const LaurentTail t = laurent_expand(num, g, len);
      REQUIRE(t.size() == len);
      // A = sum_r a_r x^{L-1-r}; then num * x^L - g * A has degree < deg g.
      std::vector<std::uint32_t> a(len);
      for (std::size_t r = 0; r < len; ++r) a[len - 1 - r] = t[r];
      const Poly diff = num.shifted(static_cast<std::uint32_t>(len)) - g * Poly(f, a);
      CHECK(diff.degree() < g.degree());
    }
  }
}

TEST_CASE("Laurent expansion prefix stability and errors") {
  const auto f2 = FieldSpec::prime(2);
  const Poly one = Poly::constant(f2, 1);
  const Poly g = Poly::parse(f2, "x^3+x+1");
  LaurentTail t(one, g);
  t.extend(8);
  const auto first = t.coeffs();
  t.extend(30);
  CHECK(std::equal(first.begin(), first.end(), t.coeffs().begin()));
  CHECK(laurent_expand(one, Poly::parse(f2, "x+1"), 5).coeffs() == std::vector<std::uint32_t>{1, 1, 1, 1, 1});
  CHECK(laurent_expand(one, Poly::parse(f2, "x"), 4).coeffs() == std::vector<std::uint32_t>{1, 0, 0, 0});
  CHECK_THROWS_AS(laurent_expand(g, g, 4), UsageError);
  CHECK_THROWS_AS(laurent_expand(one, Poly(f2), 4), DomainError);
  CHECK_THROWS_AS(divmod(g, Poly(f2)), DomainError);
}

TEST_CASE("polynomial text forms") {
  const auto f3 = FieldSpec::prime(3);
  CHECK(Poly::parse(f3, "2x^3+x-1").str() == "2x^3+x+2");
  CHECK(Poly::parse(f3, "[1,0,2]").coeffs() == std::vector<std::uint32_t>{2, 0, 1});
  CHECK_THROWS_AS(Poly::parse(f3, "x+"), UsageError);
  const auto f4 = FieldSpec::of_order(4);
  const Poly p = Poly::parse(f4, "[1,2,3]");
  CHECK(Poly::parse(f4, p.str()) == p);
  CHECK(Poly::from_index(FieldSpec::prime(2), 6).str() == "x^2+x");
}
