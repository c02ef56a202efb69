// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/brs.hpp"
#include "ldseq/digital.hpp"
#include "ldseq/error.hpp"
#include "ldseq/radinv.hpp"
#include "ldseq/verify.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace ldseq;

namespace {

DigitalSequence vdc_sequence() {
  const FieldSpec f2 = FieldSpec::prime(2);
  return DigitalSequence(niederreiter_matrices({Poly::parse(f2, "x+1")}));
}

DigitalSequence niederreiter_2d() {
  const FieldSpec f2 = FieldSpec::prime(2);
  return DigitalSequence(niederreiter_matrices({Poly::parse(f2, "x+1"), Poly::parse(f2, "x^2+x+1")}));
}

// count - N * volume with membership decided on rational values.
Rational delta_oracle(const std::vector<Point>& pts, const std::vector<Rational>& gamma) {
  Rational vol = 1;
  for (const auto& g : gamma) vol *= g;
  std::uint64_t c = 0;
  for (const auto& x : pts) {
    bool in = true;
    for (std::size_t i = 0; i < gamma.size() && in; ++i) in = x[i].value() < gamma[i];
    if (in) ++c;
  }
  return Rational(c) - vol * static_cast<std::uint64_t>(pts.size());
}

Rational abs(const Rational& r) { return r < 0 ? -r : r; }

}  // namespace

TEST_CASE("gamma parsing and canonical forms") {
  const GammaSpec a = GammaSpec::parse(2, "1/3");
  CHECK(a.coordinate(0).pre.empty());
  CHECK(a.coordinate(0).period == std::vector<std::uint32_t>{0, 1});
  CHECK(a.value(0) == Rational(1, 3));
  CHECK(a.str() == "0.(01)");

  // 0.0(1) = 0.1 and 0.(0101) = 0.(01).
  CHECK(GammaSpec::parse(2, "0.0(1)").str() == GammaSpec::parse(2, "1/2").str());
  CHECK(GammaSpec::parse(2, "0.(0101)").str() == "0.(01)");
  CHECK(GammaSpec::parse(2, "0.1(0)").str() == "0.1");
  CHECK(GammaSpec::parse(2, "0.1000").str() == "0.1");
  CHECK(GammaSpec::parse(2, "0.1(01)").str() == "0.(10)");
  CHECK(GammaSpec::parse(3, "0.(2)").coordinate(0).whole);
  CHECK(GammaSpec::parse(2, "1").coordinate(0).whole);
  CHECK(GammaSpec::parse(2, "0").value(0) == 0);

  const GammaSpec b = GammaSpec::parse(2, "3/8, 1");
  CHECK(b.dimension() == 2);
  CHECK(b.volume() == Rational(3, 8));

  std::mt19937 rng(3);
  for (std::uint32_t base : {2U, 3U, 10U})
    for (int k = 0; k < 50; ++k) {
      const std::uint64_t q = 1 + rng() % 60;
      const std::uint64_t p = rng() % (q + 1);
      const GammaSpec g = GammaSpec::from_rationals(base, {Rational(p, q)});
      CHECK(g.value(0) == Rational(p, q));
      CHECK(GammaSpec::parse(base, g.str()).value(0) == Rational(p, q));
      if (!g.coordinate(0).whole) {
        CHECK(oracle::first_difference(g.value(0), Rational(p, q), base, 40) == 0);
        Rational v = Rational(p, q);
        for (std::size_t j = 0; j < 20; ++j) {
          v *= base;
          const BigInt d = numerator(v) / denominator(v);
          CHECK(g.digit(0, j) == static_cast<std::uint32_t>(d));
          v -= d;
        }
      }
    }

  CHECK_THROWS_AS(GammaSpec::parse(2, "0.12"), UsageError);
  CHECK_THROWS_AS(GammaSpec::parse(2, "3/2"), UsageError);
  CHECK_THROWS_AS(GammaSpec::parse(2, "abc"), UsageError);
  CHECK_THROWS_AS(GammaSpec::parse(2, "0.(1"), UsageError);
}

TEST_CASE("cond check") {
  CHECK(cond_check(GammaSpec::parse(2, "1/2")));
  CHECK_FALSE(cond_check(GammaSpec::parse(2, "1/3")));
  CHECK_FALSE(cond_check(GammaSpec::parse(2, "3/4, 1/3")));
  CHECK(cond_check(GammaSpec::parse(2, "3/4, 1, 0")));
  CHECK(cond_check(GammaSpec::parse(3, "1/3")));
  CHECK_FALSE(cond_check(GammaSpec::parse(3, "1/2")));
}

TEST_CASE("delta examples") {
  const auto seq = niederreiter_2d();
  const auto pts = seq.points(0, 64);
  CHECK(delta(pts, GammaSpec::parse(2, "1, 1")) == 0);
  const std::vector<Point> origin{seq.point(0)};
  CHECK(delta(origin, GammaSpec::parse(2, "1/2, 1")) == Rational(1, 2));
  for (std::size_t m = 0; m <= 8; ++m) {
    const auto v = vdc_sequence().points(0, upow(2, m));
    CHECK(delta(v, GammaSpec::parse(2, "1/2")) == (m == 0 ? Rational(1, 2) : Rational(0)));
  }
  for (const char* g : {"1/3, 2/3", "3/8, 5/7", "0.(011), 0.1", "0, 1/2"}) {
    const GammaSpec spec = GammaSpec::parse(2, g);
    for (std::size_t n : {1U, 7U, 33U, 64U}) {
      const std::vector<Point> head(pts.begin(), pts.begin() + n);
      CHECK(delta(head, spec) == delta_oracle(head, {spec.value(0), spec.value(1)}));
    }
  }
}

TEST_CASE("comparison against a periodic corner needs enough digits") {
  const GammaSpec g = GammaSpec::parse(2, "1/3");
  CHECK(less_than(DigitString(2, {0, 1, 0, 0}, true), g, 0));
  CHECK_FALSE(less_than(DigitString(2, {0, 1, 1}, true), g, 0));
  CHECK_THROWS_AS(less_than(DigitString(2, {0, 1, 0, 1}, false), g, 0), CertificationError);
  // Other bases fall back to exact rationals.
  CHECK(less_than(DigitString(3, {0, 2}, true), g, 0));
  CHECK_FALSE(less_than(DigitString(3, {1}, true), g, 0));
}

TEST_CASE("delta profile examples") {
  const auto seq = vdc_sequence();
  const DeltaProfile half = delta_profile(seq, GammaSpec::parse(2, "1/2"), 10);
  REQUIRE(half.entries.size() == 11);
  for (const auto& e : half.entries) {
    CHECK(e.sup_abs_delta == Rational(1, 2));
    CHECK(e.n_at_sup == 1);
  }

  const DeltaProfile third = delta_profile(seq, GammaSpec::parse(2, "1/3"), 16);
  CHECK(third.entries[4].sup_abs_delta < third.entries[8].sup_abs_delta);
  CHECK(third.entries[8].sup_abs_delta < third.entries[12].sup_abs_delta);
  CHECK(third.entries[12].sup_abs_delta < third.entries[16].sup_abs_delta);

  const DeltaProfile zero = delta_profile(seq, GammaSpec::parse(2, "3/8"), 0);
  REQUIRE(zero.entries.size() == 1);
  CHECK(zero.entries[0].sup_abs_delta == Rational(5, 8));
  CHECK(zero.entries[0].n_at_sup == 1);

  CHECK_THROWS_AS(delta_profile(seq, GammaSpec::parse(2, "1/2"), 41), UsageError);
  CHECK_THROWS_AS(delta_profile(seq, GammaSpec::parse(2, "1/2, 1/2"), 3), UsageError);
}

TEST_CASE("delta profile matches recomputation from scratch") {
  const auto seq = niederreiter_2d();
  for (const char* g : {"1/3, 1/2", "3/8, 0.(01)", "5/7, 1"}) {
    const GammaSpec spec = GammaSpec::parse(2, g);
    const DeltaProfile prof = delta_profile(seq, spec, 8);
    const auto pts = seq.points(0, 256);
    Rational sup = 0;
    std::uint64_t arg = 0;
    std::size_t m = 0;
    for (std::uint64_t n = 1; n <= 256; ++n) {
      const std::vector<Point> head(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n));
      const Rational d = abs(delta_oracle(head, {spec.value(0), spec.value(1)}));
      if (d > sup) {
        sup = d;
        arg = n;
      }
      if (n == upow(2, m)) {
        CHECK(prof.entries[m].sup_abs_delta == sup);
        CHECK(prof.entries[m].n_at_sup == arg);
        ++m;
      }
    }
  }
}

TEST_CASE("delta invariants") {
  const auto seq = niederreiter_2d();
  const auto pts = seq.points(0, 512);
  std::mt19937 rng(11);
  for (int k = 0; k < 20; ++k) {
    const std::uint64_t q = 2 + rng() % 30;
    const GammaSpec g = GammaSpec::from_rationals(2, {Rational(rng() % q, q), Rational(rng() % q, q)});
    const Rational lam = g.volume();
    const Rational bound_factor = std::max(lam, Rational(1) - lam);
    const std::size_t n = 1 + rng() % 511;
    const std::size_t cut = rng() % n;
    std::span<const Point> all(pts.data(), n);
    const Rational d = delta(all, g);
    CHECK(abs(d) <= bound_factor * static_cast<std::uint64_t>(n));
    CHECK(d == delta(all.first(cut), g) + delta(all.subspan(cut), g));
  }

  // Elementary corners: Delta vanishes at N = 2^m once m >= t + sum d_i.
  for (std::size_t d1 = 0; d1 <= 3; ++d1)
    for (std::size_t d2 = 0; d2 <= 3; ++d2)
      for (std::uint64_t a1 = 0; a1 <= upow(2, d1); ++a1)
        for (std::uint64_t a2 = 0; a2 <= upow(2, d2); ++a2) {
          const GammaSpec g = GammaSpec::from_rationals(2, {Rational(a1, upow(2, d1)), Rational(a2, upow(2, d2))});
          for (std::size_t m = 1 + d1 + d2; m <= 9; ++m)
            CHECK(delta(std::span(pts).first(upow(2, m)), g) == 0);
        }

  const DeltaProfile prof = delta_profile(seq, GammaSpec::parse(2, "2/5, 3/7"), 12);
  for (std::size_t m = 1; m < prof.entries.size(); ++m)
    CHECK(prof.entries[m - 1].sup_abs_delta <= prof.entries[m].sup_abs_delta);
}

TEST_CASE("bounded verdict") {
  const auto seq = vdc_sequence();
  const GammaSpec fin = GammaSpec::parse(2, "3/8");
  const BoundedVerdict v1 = bounded_verdict(delta_profile(seq, fin, 12), fin);
  CHECK(v1.bounded);
  CHECK(v1.cond);
  CHECK_FALSE(v1.anomaly);
  CHECK(v1.m0 == 6);
  const GammaSpec per = GammaSpec::parse(2, "1/3");
  const BoundedVerdict v2 = bounded_verdict(delta_profile(seq, per, 12), per);
  CHECK_FALSE(v2.bounded);
  CHECK_FALSE(v2.cond);
  CHECK_FALSE(v2.anomaly);
  // Too few scales to see the growth.
  const BoundedVerdict v3 = bounded_verdict(delta_profile(seq, per, 2), per);
  CHECK(v3.anomaly);
  const GammaSpec empty = GammaSpec::parse(2, "0");
  const BoundedVerdict v4 = bounded_verdict(delta_profile(seq, empty, 8), empty);
  CHECK(v4.bounded);
  CHECK(v4.cond);
}

TEST_CASE("star discrepancy") {
  const std::vector<Point> origin{{DigitString(2, {0}, true)}};
  CHECK(star_discrepancy_exact(origin).value == 1);

  for (std::uint64_t n : {2U, 5U, 16U, 33U}) {
    std::vector<Point> pts;
    for (std::uint64_t k = 0; k < n; ++k) pts.push_back({cantor_inverse(k, CantorBase::constant(static_cast<std::uint32_t>(n)))});
    CHECK(star_discrepancy_exact(pts).value == Rational(1, n));
  }

  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    std::vector<Point> pts;
    std::vector<Rational> vals;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::uint32_t> d(6);
      for (auto& v : d) v = rng() % 2;
      pts.push_back({DigitString(2, d, true)});
      vals.push_back(pts.back()[0].value());
    }
    CHECK(star_discrepancy_exact(pts).value == oracle::star_discrepancy_1d(vals));
  }

  const auto seq = niederreiter_2d();
  for (std::size_t n : {3U, 16U, 50U, 128U}) {
    const auto pts = seq.points(0, n);
    std::vector<std::vector<Rational>> vals;
    for (const auto& p : pts) vals.push_back({p[0].value(), p[1].value()});
    const StarDiscrepancy d = star_discrepancy_exact(pts);
    CHECK(oracle::grid_lower_bound(vals, 64) <= d.value);
    std::vector<Point> twice;
    for (const auto& p : pts) twice.insert(twice.end(), 2, p);
    CHECK(star_discrepancy_exact(twice).value == d.value);
  }

  const auto p3 = DigitalSequence(niederreiter_matrices(
                                      {Poly::parse(FieldSpec::prime(2), "x+1"), Poly::parse(FieldSpec::prime(2), "x^2+x+1"),
                                       Poly::parse(FieldSpec::prime(2), "x^3+x+1")}))
                      .points(0, 40);
  std::vector<std::vector<Rational>> v3;
  for (const auto& p : p3) v3.push_back({p[0].value(), p[1].value(), p[2].value()});
  CHECK(oracle::grid_lower_bound(v3, 16) <= star_discrepancy_exact(p3).value);

  CHECK_THROWS_AS(star_discrepancy_exact(std::vector<Point>{}), UsageError);
  CHECK_THROWS_AS(star_discrepancy_exact(seq.points(0, 4097)), UsageError);
  CHECK_THROWS_AS(star_discrepancy_exact(DigitalSequence(niederreiter_matrices(
                                                             {Poly::parse(FieldSpec::prime(2), "x+1"),
                                                              Poly::parse(FieldSpec::prime(2), "x^2+x+1"),
                                                              Poly::parse(FieldSpec::prime(2), "x^3+x+1")}))
                                             .points(0, 513)),
                  UsageError);
}
