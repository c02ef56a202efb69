// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/error.hpp"
#include "ldseq/field.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ldseq;

TEST_CASE("prime field identities") {
  const auto f2 = FieldSpec::prime(2);
  CHECK(f2.add(1, 1) == 0);
  const auto f3 = FieldSpec::prime(3);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.neg(1) == 2);
  CHECK(f3.sub(0, 1) == 2);
}

TEST_CASE("GF(4) multiplication reduces modulo x^2+x+1") {
  const auto f4 = FieldSpec::parse("GF(4)=GF(2)[x]/(x^2+x+1)");
  // x has code 2, x + 1 has code 3.
  CHECK(f4.mul(2, 2) == 3);
  CHECK(oracle::gf_mul(2, 2, 2, {1, 1, 1}) == 3);
}

TEST_CASE("extension field tables agree with multiply-and-reduce") {
  for (std::uint32_t q : {4U, 8U, 9U, 16U, 25U, 27U, 32U, 49U, 64U}) {
    const auto f = FieldSpec::of_order(q);
    const std::uint32_t p = f.characteristic();
    const auto& mod = f.modulus();
    CAPTURE(q);
    REQUIRE(mod.size() == f.degree() + 1);
    CHECK(oracle::irreducible_exhaustive(mod, p));
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.mul(a, b) == oracle::gf_mul(a, b, p, mod));
        auto ca = oracle::code_coeffs(a, p, f.degree());
        auto cb = oracle::code_coeffs(b, p, f.degree());
        for (std::size_t i = 0; i < ca.size(); ++i) ca[i] = (ca[i] + cb[i]) % p;
        CHECK(f.add(a, b) == oracle::coeffs_code(ca, p));
      }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20260101);
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 8U, 9U}) {
    const auto f = FieldSpec::of_order(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int k = 0; k < 500; ++k) {
      const FieldElement a(f, pick(rng)), b(f, pick(rng)), c(f, pick(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == FieldElement::zero(f));
      CHECK(a + (-a) == FieldElement::zero(f));
      CHECK(a * FieldElement::one(f) == a);
    }
  }
}

TEST_CASE("every nonzero element has an inverse") {
  for (std::uint32_t q : {2U, 3U, 4U, 5U, 7U, 8U, 9U, 11U, 13U, 16U}) {
    const auto f = FieldSpec::of_order(q);
    for (std::uint32_t a = 1; a < q; ++a) {
      const FieldElement e(f, a);
      CHECK(e * e.inv() == FieldElement::one(f));
      CHECK(e / e == FieldElement::one(f));
    }
  }
}

TEST_CASE("phi is a bijection fixing zero") {
  for (std::uint32_t q : {2U, 3U, 4U, 9U, 16U}) {
    const auto f = FieldSpec::of_order(q);
    CHECK(phi(f, 0) == FieldElement::zero(f));
    std::set<std::uint32_t> image;
    for (std::uint32_t d = 0; d < q; ++d) {
      image.insert(phi(f, d).code());
      CHECK(phi_inv(phi(f, d)) == d);
    }
    CHECK(image.size() == q);
  }
  CHECK(phi_inv(phi(FieldSpec::prime(3), 2)) == 2);
}

TEST_CASE("field errors") {
  const auto f2 = FieldSpec::prime(2);
  const auto f3 = FieldSpec::prime(3);
  CHECK_THROWS_AS(FieldElement(f2, 1) + FieldElement(f3, 1), UsageError);
  CHECK_THROWS_AS(FieldElement(f3, 0).inv(), DomainError);
  CHECK_THROWS_AS(f3.inv(0), DomainError);
  CHECK_THROWS_AS(phi(f3, 3), UsageError);
  CHECK_THROWS_AS(FieldSpec::prime(6), UsageError);
  CHECK_THROWS_AS(FieldSpec::extension(2, {1, 0, 1}), UsageError);  // (x+1)^2
  CHECK_THROWS_AS(FieldSpec::parse("GF(4"), UsageError);
  CHECK_THROWS_AS(FieldSpec::of_order(6), UsageError);
}

TEST_CASE("field descriptions round-trip") {
  for (const char* text : {"2", "GF(7)", "GF(4)", "GF(9)", "GF(8)=GF(2)[x]/(x^3+x^2+1)"}) {
    const auto f = FieldSpec::parse(text);
    CHECK(FieldSpec::parse(f.describe()) == f);
  }
  CHECK(FieldSpec::parse("GF(4)").describe() == "GF(4)=GF(2)[x]/(x^2+x+1)");
  CHECK(FieldSpec::parse("GF(8)=GF(2)[x]/(x^3+x^2+1)").modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(FieldSpec::parse("5").order() == 5);
}
