// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/digits.hpp"
#include "ldseq/field.hpp"
#include "ldseq/poly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldseq {

/// Digits per coordinate unless the caller asks otherwise.
inline constexpr std::size_t kDefaultPrecision = 64;

/// Cantor radix list Q = (q_1, q_2, ...): a finite prefix followed by a cycle
/// repeated forever. An empty cycle makes the list finite.
class CantorBase {
 public:
  CantorBase(std::vector<std::uint32_t> prefix, std::vector<std::uint32_t> cycle);
  static CantorBase constant(std::uint32_t q) { return CantorBase({}, {q}); }

  bool finite() const noexcept { return cycle_.empty(); }
  /// Number of radices available; SIZE_MAX when the list is infinite.
  std::size_t depth() const noexcept;
  /// q_{j+1} (0-based). UsageError past the end of a finite list.
  std::uint32_t radix(std::size_t j) const;
  std::vector<std::uint32_t> radices(std::size_t depth) const;
  /// Q_j = q_1 ... q_j, Q_0 = 1.
  BigInt cumulative(std::size_t j) const;
  /// Every radix that ever occurs.
  std::vector<std::uint32_t> distinct() const;

  const std::vector<std::uint32_t>& prefix() const noexcept { return prefix_; }
  const std::vector<std::uint32_t>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::uint32_t> prefix_;
  std::vector<std::uint32_t> cycle_;
};

/// Van der Corput radical inverse phi_q(n) to `precision` base-q digits.
/// UsageError if n has more than `precision` digits.
DigitString vdc(std::uint64_t n, std::uint32_t q, std::size_t precision = kDefaultPrecision);

/// phi_Q(n) = sum_j n_j / Q_j over the Cantor digits of n. The result has
/// min(precision, depth) digits; UsageError if Q_L <= n.
DigitString cantor_inverse(std::uint64_t n, const CantorBase& base, std::size_t precision = kDefaultPrecision);

/// Generalized Halton sequence (phi_{Q_1}(n), ..., phi_{Q_s}(n)) with
/// radices pairwise coprime across coordinates. The classical Halton
/// sequence is the case of constant radix lists.
class HellekalekSequence : public PointSequence {
 public:
  /// ConfigError when radices of different coordinates share a factor.
  explicit HellekalekSequence(std::vector<CantorBase> bases, std::size_t precision = kDefaultPrecision);

  std::size_t dimension() const override { return bases_.size(); }
  Point point(std::uint64_t n) const override;
  std::string describe() const override;
  const std::vector<CantorBase>& bases() const noexcept { return bases_; }

 private:
  std::vector<CantorBase> bases_;
  std::size_t precision_;
};

Point hellekalek_point(std::uint64_t n, const std::vector<CantorBase>& bases,
                       std::size_t precision = kDefaultPrecision);

/// Polynomial-arithmetic Halton analogue: v_n = sum_k r_k p^k is mapped to
/// the Laurent expansion of sum_k r_k / p^{k+1}, whose coefficient of
/// x^{-j} becomes base-b digit j.
class TezukaSequence : public PointSequence {
 public:
  /// ConfigError for constant or non-coprime moduli.
  explicit TezukaSequence(std::vector<Poly> moduli, std::size_t precision = kDefaultPrecision);

  std::size_t dimension() const override { return moduli_.size(); }
  Point point(std::uint64_t n) const override;
  std::string describe() const override;
  const FieldSpec& field() const noexcept { return moduli_.front().field(); }
  const std::vector<Poly>& moduli() const noexcept { return moduli_; }

  /// Coordinate i for an arbitrary polynomial v in place of v_n.
  DigitString coordinate(const Poly& v, std::size_t i) const;

 private:
  std::vector<Poly> moduli_;
  std::size_t precision_;
};

Point tezuka_point(std::uint64_t n, const std::vector<Poly>& moduli, std::size_t precision = kDefaultPrecision);

/// Per-coordinate lists of monic irreducible polynomials P_{i,1}, P_{i,2}, ...
/// (prefix then cycle, as for CantorBase).
///
/// Requirements, checked at construction (ConfigError):
///  - every place is monic, irreducible and coprime to x;
///  - no place occurs in two different coordinates.
class PlaceList {
 public:
  struct Coordinate {
    std::vector<Poly> prefix;
    std::vector<Poly> cycle;
  };

  PlaceList(FieldSpec field, std::vector<Coordinate> coordinates);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return coords_.size(); }
  /// P_{i,j+1} (0-based j). UsageError past the end of a finite list.
  const Poly& place(std::size_t i, std::size_t j) const;
  /// n_{i,j} = deg(P_{i,1} ... P_{i,j}).
  std::size_t cumulative_degree(std::size_t i, std::size_t j) const;
  /// P_{i,1} ... P_{i,j}, the empty product being 1.
  Poly cumulative_product(std::size_t i, std::size_t j) const;
  const Coordinate& coordinate(std::size_t i) const { return coords_.at(i); }
  /// Largest place degree of coordinate i.
  std::size_t max_degree(std::size_t i) const;

 private:
  FieldSpec field_;
  std::vector<Coordinate> coords_;
};

/// Genus-0 Halton-type sequence over F_b[x]. For f_n = v_n(x), digit block j
/// of coordinate i is the residue (f_n div P_{i,1}...P_{i,j-1}) mod P_{i,j},
/// written as its coefficients of 1, x, ..., x^{e-1} in that order.
class HaltonTypeSequence : public PointSequence {
 public:
  explicit HaltonTypeSequence(PlaceList places, std::size_t precision = kDefaultPrecision);

  std::size_t dimension() const override { return places_.dimension(); }
  Point point(std::uint64_t n) const override;
  std::string describe() const override;
  const PlaceList& places() const noexcept { return places_; }

  /// Digits of coordinate i for an arbitrary polynomial f (the sequence
  /// evaluates it at f = v_n). UsageError if f does not fit the precision.
  DigitString coordinate(const Poly& f, std::size_t i) const;

 private:
  PlaceList places_;
  std::size_t precision_;
};

Point halton_type_point(std::uint64_t n, const PlaceList& places, std::size_t precision = kDefaultPrecision);

}  // namespace ldseq
