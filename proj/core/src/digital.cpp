// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/digital.hpp"

#include "ldseq/error.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

namespace ldseq {

// ----------------------------------------------------------------- Matrix

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

std::vector<std::uint32_t> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::rref(std::vector<std::size_t>& pivots) const {
  Matrix a = *this;
  const FieldSpec& f = field_;
  pivots.clear();
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
    std::size_t sel = prow;
    while (sel < rows_ && a(sel, c) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != prow)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(a(sel, k), a(prow, k));
    const std::uint32_t inv = f.inv(a(prow, c));
    for (std::size_t k = 0; k < cols_; ++k) a(prow, k) = f.mul(a(prow, k), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == prow || a(r, c) == 0) continue;
      const std::uint32_t factor = a(r, c);
      for (std::size_t k = 0; k < cols_; ++k) a(r, k) = f.sub(a(r, k), f.mul(factor, a(prow, k)));
    }
    pivots.push_back(c);
    ++prow;
  }
  return a;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(pivots);
  return pivots.size();
}

std::vector<std::vector<std::uint32_t>> Matrix::null_space() const {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(cols_, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

// ------------------------------------------------------------------ rules

namespace {

class IdentityRule final : public MatrixRule {
 public:
  Column column(std::size_t r, std::size_t rows) override {
    Column c;
    c.entries.assign(rows, 0);
    if (r < rows) c.entries[r] = 1;
    c.tail_zero = r < rows;
    return c;
  }
  std::string describe() const override { return "identity"; }
};

class ExplicitRule final : public MatrixRule {
 public:
  explicit ExplicitRule(std::vector<std::vector<std::uint32_t>> rows) : rows_(std::move(rows)) {}
  Column column(std::size_t r, std::size_t rows) override {
    Column c;
    c.entries.assign(rows, 0);
    c.tail_zero = true;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      const std::uint32_t v = r < rows_[j].size() ? rows_[j][r] : 0;
      if (j < rows)
        c.entries[j] = v;
      else if (v != 0)
        c.tail_zero = false;
    }
    return c;
  }
  std::string describe() const override {
    std::size_t cols = 0;
    for (const auto& row : rows_) cols = std::max(cols, row.size());
    return "explicit " + std::to_string(rows_.size()) + "x" + std::to_string(cols);
  }

 private:
  std::vector<std::vector<std::uint32_t>> rows_;
};

class NiederreiterRule final : public MatrixRule {
 public:
  NiederreiterRule(std::size_t coord, Poly modulus, NumeratorChoice numerators)
      : coord_(coord), p_(std::move(modulus)), numerators_(std::move(numerators)) {}

  Column column(std::size_t r, std::size_t rows) override {
    Column c;
    c.entries.resize(rows);
    for (std::size_t j = 1; j <= rows; ++j) {
      LaurentTail& t = tail(j);
      t.extend(r + 1);
      c.entries[j - 1] = t[r];
    }
    return c;
  }

  std::string describe() const override {
    return "niederreiter p=" + p_.str() + (numerators_ ? " (custom numerators)" : "");
  }

 private:
  LaurentTail& tail(std::size_t j) {
    const std::size_t e = static_cast<std::size_t>(p_.degree());
    while (tails_.size() < j) {
      const std::size_t row = tails_.size() + 1;
      const std::size_t q = (row - 1) / e;
      const std::size_t k = (row - 1) % e;
      if (powers_.size() <= q) powers_.push_back(p_.pow(static_cast<std::uint32_t>(q + 1)));
      const Poly& den = powers_[q];
      if (k == 0 && numerators_) check_independent(q + 1);
      const Poly y = numerators_ ? numerators_(coord_, q + 1, k) : Poly::monomial(p_.field(), static_cast<std::uint32_t>(k));
      tails_.emplace_back(y % den, den);
    }
    return tails_[j - 1];
  }

  void check_independent(std::size_t j) const {
    const std::size_t e = static_cast<std::size_t>(p_.degree());
    Matrix m(p_.field(), e, e);
    for (std::size_t k = 0; k < e; ++k) {
      const Poly y = numerators_(coord_, j, k) % p_;
      for (std::size_t c = 0; c < e; ++c) m(k, c) = y.coeff(c);
    }
    if (m.rank() != e)
      throw ConfigError("numerators y_{" + std::to_string(coord_ + 1) + "," + std::to_string(j) +
                        ",k} are not linearly independent modulo " + p_.str());
  }

  std::size_t coord_;
  Poly p_;
  NumeratorChoice numerators_;
  std::vector<Poly> powers_;
  std::vector<LaurentTail> tails_;
};

class HaltonTypeRule final : public MatrixRule {
 public:
  HaltonTypeRule(PlaceList places, std::size_t coord) : places_(std::move(places)), coord_(coord) {}
  Column column(std::size_t r, std::size_t rows) override {
    const std::size_t need = std::max(rows, r + 1 + places_.max_degree(coord_));
    const HaltonTypeSequence seq(places_, need);
    const DigitString d = seq.coordinate(Poly::monomial(places_.field(), static_cast<std::uint32_t>(r)), coord_);
    Column c;
    c.entries.assign(d.digits().begin(), d.digits().begin() + static_cast<std::ptrdiff_t>(rows));
    c.tail_zero = std::all_of(d.digits().begin() + static_cast<std::ptrdiff_t>(rows), d.digits().end(),
                              [](std::uint32_t v) { return v == 0; });
    return c;
  }
  std::string describe() const override { return "halton-type coordinate " + std::to_string(coord_ + 1); }

 private:
  PlaceList places_;
  std::size_t coord_;
};

class TezukaRule final : public MatrixRule {
 public:
  TezukaRule(std::vector<Poly> moduli, std::size_t coord) : moduli_(std::move(moduli)), coord_(coord) {}
  Column column(std::size_t r, std::size_t rows) override {
    const TezukaSequence seq(moduli_, rows);
    const DigitString d = seq.coordinate(Poly::monomial(moduli_[coord_].field(), static_cast<std::uint32_t>(r)), coord_);
    return {d.digits(), d.exact()};
  }
  std::string describe() const override { return "tezuka p=" + moduli_[coord_].str(); }

 private:
  std::vector<Poly> moduli_;
  std::size_t coord_;
};

}  // namespace

// ------------------------------------------------------- GeneratingMatrix

struct GeneratingMatrix::State {
  std::mutex mu;
  std::unique_ptr<MatrixRule> rule;
  std::shared_ptr<const Snapshot> snap = std::make_shared<Snapshot>();
};

GeneratingMatrix::GeneratingMatrix(FieldSpec field, std::unique_ptr<MatrixRule> rule)
    : field_(std::move(field)), state_(std::make_shared<State>()) {
  state_->rule = std::move(rule);
}

GeneratingMatrix GeneratingMatrix::identity(const FieldSpec& field) {
  return GeneratingMatrix(field, std::make_unique<IdentityRule>());
}

GeneratingMatrix GeneratingMatrix::explicit_rows(const FieldSpec& field,
                                                 std::vector<std::vector<std::uint32_t>> rows) {
  for (const auto& row : rows)
    for (std::uint32_t v : row)
      if (v >= field.order()) throw UsageError("matrix entry out of range for " + field.describe());
  return GeneratingMatrix(field, std::make_unique<ExplicitRule>(std::move(rows)));
}

std::shared_ptr<const GeneratingMatrix::Snapshot> GeneratingMatrix::materialize(std::size_t rows,
                                                                               std::size_t cols) const {
  std::lock_guard lock(state_->mu);
  const auto& old = state_->snap;
  if (old->rows >= rows && old->columns.size() >= cols) return old;
  auto next = std::make_shared<Snapshot>();
  next->rows = std::max(rows, old->rows);
  const std::size_t want_cols = std::max(cols, old->columns.size());
  next->columns.reserve(want_cols);
  if (next->rows == old->rows) next->columns = old->columns;
  for (std::size_t r = next->columns.size(); r < want_cols; ++r)
    next->columns.push_back(state_->rule->column(r, next->rows));
  if (field_.order() == 2 && next->rows <= 64) {
    next->packed.resize(want_cols, 0);
    for (std::size_t r = 0; r < want_cols; ++r)
      for (std::size_t j = 0; j < next->rows; ++j)
        if (next->columns[r].entries[j]) next->packed[r] |= std::uint64_t{1} << j;
  }
  state_->snap = next;
  return next;
}

std::uint32_t GeneratingMatrix::entry(std::size_t j, std::size_t r) const {
  if (j == 0) throw UsageError("generating-matrix rows are numbered from 1");
  return materialize(j, r + 1)->columns[r].entries[j - 1];
}

std::vector<std::vector<std::uint32_t>> GeneratingMatrix::block(std::size_t rows, std::size_t cols) const {
  auto snap = materialize(rows, cols);
  std::vector<std::vector<std::uint32_t>> out(rows, std::vector<std::uint32_t>(cols));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t r = 0; r < cols; ++r) out[j][r] = snap->columns[r].entries[j];
  return out;
}

std::string GeneratingMatrix::describe() const {
  std::lock_guard lock(state_->mu);
  return state_->rule->describe();
}

// ------------------------------------------------------------ point maps

Point digital_point(std::uint64_t n, const DigitalConfig& cfg) {
  const FieldSpec& field = cfg.field;
  const std::uint32_t b = field.order();
  const std::size_t len = cfg.precision;
  std::vector<std::uint32_t> a;
  for (std::uint64_t v = n; v; v /= b) a.push_back(static_cast<std::uint32_t>(v % b));

  Point pt;
  pt.reserve(cfg.matrices.size());
  for (const GeneratingMatrix& c : cfg.matrices) {
    auto snap = c.materialize(len, a.size());
    std::vector<std::uint32_t> y(len, 0);
    bool exact = true;
    if (!snap->packed.empty() && snap->rows == len) {
      std::uint64_t bits = 0;
      for (std::size_t r = 0; r < a.size(); ++r)
        if (a[r]) {
          bits ^= snap->packed[r];
          exact = exact && snap->columns[r].tail_zero;
        }
      for (std::size_t j = 0; j < len; ++j) y[j] = static_cast<std::uint32_t>((bits >> j) & 1U);
    } else {
      for (std::size_t r = 0; r < a.size(); ++r) {
        if (a[r] == 0) continue;
        const auto& col = snap->columns[r];
        exact = exact && col.tail_zero &&
                std::all_of(col.entries.begin() + static_cast<std::ptrdiff_t>(len), col.entries.end(),
                            [](std::uint32_t v) { return v == 0; });
        for (std::size_t j = 0; j < len; ++j) y[j] = field.add(y[j], field.mul(a[r], col.entries[j]));
      }
    }
    // phi^{-1} is the identity on element codes.
    pt.emplace_back(b, std::move(y), exact);
  }
  return pt;
}

DigitalSequence::DigitalSequence(DigitalConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.matrices.empty()) throw ConfigError("digital sequence needs at least one generating matrix");
  for (const auto& m : cfg_.matrices)
    if (!(m.field() == cfg_.field)) throw ConfigError("generating matrices must share the field " + cfg_.field.describe());
}

std::string DigitalSequence::describe() const {
  std::string s = "digital(" + cfg_.field.describe();
  for (const auto& m : cfg_.matrices) s += "; " + m.describe();
  return s + ")";
}

// ---------------------------------------------------------- constructions

DigitalConfig niederreiter_matrices(const std::vector<Poly>& moduli, NumeratorChoice numerators,
                                    std::size_t precision) {
  if (moduli.empty()) throw ConfigError("Niederreiter construction needs at least one modulus");
  const FieldSpec& field = moduli.front().field();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const Poly& p = moduli[i];
    if (!(p.field() == field)) throw ConfigError("Niederreiter moduli must share one field");
    if (p.degree() < 1) throw ConfigError("Niederreiter modulus " + p.str() + " is constant");
    if (p.coeff(0) == 0) throw ConfigError("Niederreiter modulus " + p.str() + " is not coprime to x");
    for (std::size_t k = 0; k < i; ++k)
      if (!coprime(p, moduli[k]))
        throw ConfigError("Niederreiter moduli " + moduli[k].str() + " and " + p.str() + " are not coprime");
  }
  DigitalConfig cfg{field, {}, precision};
  for (std::size_t i = 0; i < moduli.size(); ++i)
    cfg.matrices.emplace_back(field, std::make_unique<NiederreiterRule>(i, moduli[i], numerators));
  return cfg;
}

DigitalConfig halton_type_matrices(const PlaceList& places, std::size_t precision) {
  DigitalConfig cfg{places.field(), {}, precision};
  for (std::size_t i = 0; i < places.dimension(); ++i)
    cfg.matrices.emplace_back(places.field(), std::make_unique<HaltonTypeRule>(places, i));
  return cfg;
}

DigitalConfig tezuka_matrices(const std::vector<Poly>& moduli, std::size_t precision) {
  const TezukaSequence check(moduli, precision);  // validates
  DigitalConfig cfg{check.field(), {}, precision};
  for (std::size_t i = 0; i < moduli.size(); ++i)
    cfg.matrices.emplace_back(check.field(), std::make_unique<TezukaRule>(moduli, i));
  return cfg;
}

Matrix overall_matrix(const DigitalConfig& cfg, std::size_t m) {
  const std::size_t s = cfg.dimension();
  Matrix out(cfg.field, m, s * m);
  for (std::size_t i = 0; i < s; ++i) {
    auto snap = cfg.matrices[i].materialize(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t j = 0; j < m; ++j) out(r, i * m + j) = snap->columns[r].entries[j];
  }
  return out;
}

DualBasis dual_space(const DigitalConfig& cfg, std::size_t m) {
  const Matrix c = overall_matrix(cfg, m);
  DualBasis d;
  d.m = m;
  d.s = cfg.dimension();
  d.row_space_dim = c.rank();
  d.basis = c.null_space();
  return d;
}

}  // namespace ldseq
