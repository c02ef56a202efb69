// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/digits.hpp"
#include "ldseq/field.hpp"
#include "ldseq/poly.hpp"
#include "ldseq/radinv.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace ldseq {

/// Dense matrix over F_b, row-major, entries are element codes.
class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  std::vector<std::uint32_t> row(std::size_t r) const;

  std::size_t rank() const;
  /// Basis of {v : M v = 0}, one vector of length cols() per free column of
  /// the reduced row echelon form.
  std::vector<std::vector<std::uint32_t>> null_space() const;

 private:
  Matrix rref(std::vector<std::size_t>& pivots) const;
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

/// Computes columns of an infinite generating matrix. Implementations must be
/// deterministic and prefix-stable: asking for more rows never changes the
/// entries already produced.
class MatrixRule {
 public:
  struct Column {
    std::vector<std::uint32_t> entries;  // rows 1..R (index 0 is row 1)
    bool tail_zero = false;              // all rows past R vanish in this column
  };
  virtual ~MatrixRule() = default;
  virtual Column column(std::size_t r, std::size_t rows) = 0;
  virtual std::string describe() const = 0;
};

/// Generating matrix C = (c_{j,r})_{j>=1, r>=0} materialized lazily.
///
/// Columns are memoized in immutable snapshots; a growing request builds a
/// new snapshot under a lock, so concurrent readers always observe identical
/// entries. Copies share the memo.
class GeneratingMatrix {
 public:
  struct Snapshot {
    std::size_t rows = 0;
    std::vector<MatrixRule::Column> columns;
    // For b = 2 and rows <= 64: column r packed with row j in bit j-1.
    std::vector<std::uint64_t> packed;
  };

  GeneratingMatrix(FieldSpec field, std::unique_ptr<MatrixRule> rule);

  static GeneratingMatrix identity(const FieldSpec& field);
  /// Finite matrix given row by row (row 0 is j = 1); entries outside are zero.
  static GeneratingMatrix explicit_rows(const FieldSpec& field, std::vector<std::vector<std::uint32_t>> rows);

  const FieldSpec& field() const noexcept { return field_; }
  /// c_{j,r} for 1-based row j and 0-based column r.
  std::uint32_t entry(std::size_t j, std::size_t r) const;
  /// Upper-left block, rows j = 1..rows as a row-major grid.
  std::vector<std::vector<std::uint32_t>> block(std::size_t rows, std::size_t cols) const;
  /// Snapshot holding at least `rows` x `cols`.
  std::shared_ptr<const Snapshot> materialize(std::size_t rows, std::size_t cols) const;
  std::string describe() const;

 private:
  struct State;
  FieldSpec field_;
  std::shared_ptr<State> state_;
};

/// Generating matrices (C^(1), ..., C^(s)) over one field plus the number of
/// output digits per coordinate.
struct DigitalConfig {
  FieldSpec field;
  std::vector<GeneratingMatrix> matrices;
  std::size_t precision = kDefaultPrecision;

  std::size_t dimension() const noexcept { return matrices.size(); }
};

/// y^(i)_{n,j} = sum_r phi(a_r(n)) c^(i)_{j,r}; digits are phi^{-1}(y).
Point digital_point(std::uint64_t n, const DigitalConfig& cfg);

class DigitalSequence : public PointSequence {
 public:
  explicit DigitalSequence(DigitalConfig cfg);
  std::size_t dimension() const override { return cfg_.dimension(); }
  Point point(std::uint64_t n) const override { return digital_point(n, cfg_); }
  std::string describe() const override;
  const DigitalConfig& config() const noexcept { return cfg_; }

 private:
  DigitalConfig cfg_;
};

/// y_{i,j,k}(x) for coordinate i (0-based), j >= 1 and 0 <= k < e_i.
using NumeratorChoice = std::function<Poly(std::size_t i, std::size_t j, std::size_t k)>;

/// Generalized Niederreiter matrices: c^(i)_{j,r} = a^(i)(Q+1, k, r) with
/// j - 1 = Q e_i + k, where a^(i)(j,k,.) is the coefficient stream of
/// y_{i,j,k}(x) / p_i(x)^j. The default numerators are y_{i,j,k} = x^k.
///
/// ConfigError unless the moduli are nonconstant, pairwise coprime and
/// coprime to x; a custom numerator family that is not linearly independent
/// modulo p_i raises ConfigError when the offending rows are materialized.
DigitalConfig niederreiter_matrices(const std::vector<Poly>& moduli, NumeratorChoice numerators = {},
                                    std::size_t precision = kDefaultPrecision);

/// Matrices of the genus-0 Halton-type sequence: column r holds the digits
/// of the basis element x^r, so digital_point reproduces halton_type_point.
DigitalConfig halton_type_matrices(const PlaceList& places, std::size_t precision = kDefaultPrecision);

/// Matrices whose columns are the Tezuka digits of x^r.
DigitalConfig tezuka_matrices(const std::vector<Poly>& moduli, std::size_t precision = kDefaultPrecision);

/// [C]_m = ([C^(1)]_m^T | ... | [C^(s)]_m^T), an m x sm matrix.
Matrix overall_matrix(const DigitalConfig& cfg, std::size_t m);

struct DualBasis {
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t row_space_dim = 0;                   // dim C_m
  std::vector<std::vector<std::uint32_t>> basis;   // spans C_m^perp, vectors of length s*m
};

/// Orthogonal complement of the row space of [C]_m in F_b^{sm}.
DualBasis dual_space(const DigitalConfig& cfg, std::size_t m);

}  // namespace ldseq
