// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ldseq/radinv.hpp"

#include "ldseq/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace ldseq {

// ---------------------------------------------------------------- CantorBase

CantorBase::CantorBase(std::vector<std::uint32_t> prefix, std::vector<std::uint32_t> cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (prefix_.empty() && cycle_.empty()) throw UsageError("Cantor base needs at least one radix");
  for (std::uint32_t q : prefix_)
    if (q < 2) throw UsageError("Cantor radices must be >= 2");
  for (std::uint32_t q : cycle_)
    if (q < 2) throw UsageError("Cantor radices must be >= 2");
}

std::size_t CantorBase::depth() const noexcept {
  return cycle_.empty() ? prefix_.size() : std::numeric_limits<std::size_t>::max();
}

std::uint32_t CantorBase::radix(std::size_t j) const {
  if (j < prefix_.size()) return prefix_[j];
  if (cycle_.empty()) throw UsageError("Cantor base has only " + std::to_string(prefix_.size()) + " radices");
  return cycle_[(j - prefix_.size()) % cycle_.size()];
}

std::vector<std::uint32_t> CantorBase::radices(std::size_t depth) const {
  std::vector<std::uint32_t> out(depth);
  for (std::size_t j = 0; j < depth; ++j) out[j] = radix(j);
  return out;
}

BigInt CantorBase::cumulative(std::size_t j) const {
  BigInt q = 1;
  for (std::size_t k = 0; k < j; ++k) q *= radix(k);
  return q;
}

std::vector<std::uint32_t> CantorBase::distinct() const {
  std::set<std::uint32_t> s(prefix_.begin(), prefix_.end());
  s.insert(cycle_.begin(), cycle_.end());
  return {s.begin(), s.end()};
}

// ------------------------------------------------------- radical inverses

DigitString vdc(std::uint64_t n, std::uint32_t q, std::size_t precision) {
  if (q < 2) throw UsageError("van der Corput base must be >= 2");
  std::vector<std::uint32_t> digits(precision, 0);
  std::size_t j = 0;
  while (n) {
    if (j == precision)
      throw UsageError("precision " + std::to_string(precision) + " too small for the base-" + std::to_string(q) +
                       " digits of the index");
    digits[j++] = static_cast<std::uint32_t>(n % q);
    n /= q;
  }
  return DigitString(q, std::move(digits), true);
}

DigitString cantor_inverse(std::uint64_t n, const CantorBase& base, std::size_t precision) {
  const std::size_t len = std::min(precision, base.depth());
  std::vector<std::uint32_t> radices = base.radices(len);
  std::vector<std::uint32_t> digits(len, 0);
  for (std::size_t j = 0; j < len && n; ++j) {
    digits[j] = static_cast<std::uint32_t>(n % radices[j]);
    n /= radices[j];
  }
  if (n) throw UsageError("Cantor base too shallow: Q_" + std::to_string(len) + " does not exceed the index");
  return DigitString(std::move(radices), std::move(digits), true);
}

// ------------------------------------------------------------- Hellekalek

HellekalekSequence::HellekalekSequence(std::vector<CantorBase> bases, std::size_t precision)
    : bases_(std::move(bases)), precision_(precision) {
  if (bases_.empty()) throw ConfigError("Hellekalek sequence needs at least one coordinate");
  for (std::size_t i = 0; i < bases_.size(); ++i)
    for (std::size_t k = i + 1; k < bases_.size(); ++k)
      for (std::uint32_t a : bases_[i].distinct())
        for (std::uint32_t b : bases_[k].distinct())
          if (std::gcd(a, b) != 1)
            throw ConfigError("radices " + std::to_string(a) + " (coordinate " + std::to_string(i + 1) + ") and " +
                              std::to_string(b) + " (coordinate " + std::to_string(k + 1) + ") are not coprime");
}

Point HellekalekSequence::point(std::uint64_t n) const {
  Point p;
  p.reserve(bases_.size());
  for (const CantorBase& b : bases_) p.push_back(cantor_inverse(n, b, precision_));
  return p;
}

std::string HellekalekSequence::describe() const {
  std::string s = "hellekalek(";
  for (std::size_t i = 0; i < bases_.size(); ++i) {
    if (i) s += "; ";
    const auto& b = bases_[i];
    for (std::size_t j = 0; j < b.prefix().size(); ++j) s += (j ? "," : "") + std::to_string(b.prefix()[j]);
    if (!b.cycle().empty()) {
      if (!b.prefix().empty()) s += "|";
      for (std::size_t j = 0; j < b.cycle().size(); ++j) s += (j ? "," : "") + std::to_string(b.cycle()[j]);
      s += "...";
    }
  }
  return s + ")";
}

Point hellekalek_point(std::uint64_t n, const std::vector<CantorBase>& bases, std::size_t precision) {
  return HellekalekSequence(bases, precision).point(n);
}

// ----------------------------------------------------------------- Tezuka

TezukaSequence::TezukaSequence(std::vector<Poly> moduli, std::size_t precision)
    : moduli_(std::move(moduli)), precision_(precision) {
  if (moduli_.empty()) throw ConfigError("Tezuka sequence needs at least one modulus");
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (!(moduli_[i].field() == moduli_[0].field())) throw ConfigError("Tezuka moduli must share one field");
    if (moduli_[i].degree() < 1) throw ConfigError("Tezuka modulus " + moduli_[i].str() + " is constant");
    for (std::size_t k = 0; k < i; ++k)
      if (!coprime(moduli_[i], moduli_[k]))
        throw ConfigError("Tezuka moduli " + moduli_[k].str() + " and " + moduli_[i].str() + " are not coprime");
  }
}

DigitString TezukaSequence::coordinate(const Poly& v, std::size_t i) const {
  const Poly& p = moduli_[i];
  const FieldSpec& field = p.field();
  // v = sum_k r_k p^k
  std::vector<Poly> r;
  Poly rest = v;
  while (!rest.is_zero()) {
    auto [q, rem] = divmod(rest, p);
    r.push_back(std::move(rem));
    rest = std::move(q);
  }
  if (r.empty()) return DigitString(field.order(), std::vector<std::uint32_t>(precision_, 0), true);
  // sum_k r_k / p^{k+1} = (sum_k r_k p^{K-k}) / p^{K+1}
  const std::size_t top = r.size() - 1;
  Poly num(field);
  for (std::size_t k = 0; k <= top; ++k) num = num * p + r[k];
  Poly den = p.pow(static_cast<std::uint32_t>(top + 1));
  LaurentTail tail = laurent_expand(num, den, precision_);
  return DigitString(field.order(), tail.coeffs(), tail.exhausted());
}

Point TezukaSequence::point(std::uint64_t n) const {
  const Poly v = Poly::from_index(field(), n);
  Point pt;
  pt.reserve(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) pt.push_back(coordinate(v, i));
  return pt;
}

std::string TezukaSequence::describe() const {
  std::string s = "tezuka(" + field().describe() + "; ";
  for (std::size_t i = 0; i < moduli_.size(); ++i) s += (i ? ", " : "") + moduli_[i].str();
  return s + ")";
}

Point tezuka_point(std::uint64_t n, const std::vector<Poly>& moduli, std::size_t precision) {
  return TezukaSequence(moduli, precision).point(n);
}

// -------------------------------------------------------------- PlaceList

PlaceList::PlaceList(FieldSpec field, std::vector<Coordinate> coordinates)
    : field_(std::move(field)), coords_(std::move(coordinates)) {
  if (coords_.empty()) throw ConfigError("place list needs at least one coordinate");
  std::vector<std::vector<Poly>> distinct(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Coordinate& c = coords_[i];
    if (c.prefix.empty() && c.cycle.empty())
      throw ConfigError("coordinate " + std::to_string(i + 1) + " has no places");
    auto check = [&](const Poly& p) {
      if (!(p.field() == field_)) throw ConfigError("place " + p.str() + " is over a different field");
      if (p.degree() < 1) throw ConfigError("place " + p.str() + " is constant");
      if (!p.is_monic()) throw ConfigError("place " + p.str() + " is not monic");
      if (p.coeff(0) == 0) throw ConfigError("place " + p.str() + " is not coprime to x");
      if (!is_irreducible(p)) throw ConfigError("place " + p.str() + " is reducible");
      if (std::find(distinct[i].begin(), distinct[i].end(), p) == distinct[i].end()) distinct[i].push_back(p);
    };
    for (const Poly& p : c.prefix) check(p);
    for (const Poly& p : c.cycle) check(p);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i)
    for (std::size_t k = i + 1; k < distinct.size(); ++k)
      for (const Poly& p : distinct[i])
        if (std::find(distinct[k].begin(), distinct[k].end(), p) != distinct[k].end())
          throw ConfigError("place " + p.str() + " is used by coordinates " + std::to_string(i + 1) + " and " +
                            std::to_string(k + 1));
}

const Poly& PlaceList::place(std::size_t i, std::size_t j) const {
  const Coordinate& c = coords_.at(i);
  if (j < c.prefix.size()) return c.prefix[j];
  if (c.cycle.empty())
    throw UsageError("coordinate " + std::to_string(i + 1) + " has only " + std::to_string(c.prefix.size()) +
                     " places");
  return c.cycle[(j - c.prefix.size()) % c.cycle.size()];
}

std::size_t PlaceList::cumulative_degree(std::size_t i, std::size_t j) const {
  std::size_t n = 0;
  for (std::size_t k = 0; k < j; ++k) n += static_cast<std::size_t>(place(i, k).degree());
  return n;
}

std::size_t PlaceList::max_degree(std::size_t i) const {
  const Coordinate& c = coords_.at(i);
  std::size_t e = 0;
  for (const Poly& p : c.prefix) e = std::max(e, static_cast<std::size_t>(p.degree()));
  for (const Poly& p : c.cycle) e = std::max(e, static_cast<std::size_t>(p.degree()));
  return e;
}

Poly PlaceList::cumulative_product(std::size_t i, std::size_t j) const {
  Poly prod = Poly::constant(field_, 1);
  for (std::size_t k = 0; k < j; ++k) prod = prod * place(i, k);
  return prod;
}

// ------------------------------------------------------------ Halton-type

HaltonTypeSequence::HaltonTypeSequence(PlaceList places, std::size_t precision)
    : places_(std::move(places)), precision_(precision) {}

DigitString HaltonTypeSequence::coordinate(const Poly& f, std::size_t i) const {
  const FieldSpec& field = places_.field();
  std::vector<std::uint32_t> digits;
  digits.reserve(precision_);
  Poly rest = f;
  for (std::size_t j = 0; !rest.is_zero(); ++j) {
    const Poly& place = places_.place(i, j);
    auto [q, r] = divmod(rest, place);
    const std::size_t e = static_cast<std::size_t>(place.degree());
    for (std::size_t mu = 0; mu < e; ++mu) {
      if (digits.size() == precision_) {
        if (r.coeff(mu) != 0 || !q.is_zero())
          throw UsageError("precision " + std::to_string(precision_) + " too small for Halton-type digits of " +
                           f.str());
        break;
      }
      digits.push_back(r.coeff(mu));
    }
    rest = std::move(q);
  }
  digits.resize(precision_, 0);
  return DigitString(field.order(), std::move(digits), true);
}

Point HaltonTypeSequence::point(std::uint64_t n) const {
  const Poly f = Poly::from_index(places_.field(), n);
  Point pt;
  pt.reserve(places_.dimension());
  for (std::size_t i = 0; i < places_.dimension(); ++i) pt.push_back(coordinate(f, i));
  return pt;
}

std::string HaltonTypeSequence::describe() const {
  std::string s = "halton-type(" + places_.field().describe();
  for (std::size_t i = 0; i < places_.dimension(); ++i) {
    s += "; ";
    const auto& c = places_.coordinate(i);
    for (std::size_t j = 0; j < c.prefix.size(); ++j) s += (j ? "," : "") + c.prefix[j].str();
    if (!c.cycle.empty()) {
      if (!c.prefix.empty()) s += "|";
      for (std::size_t j = 0; j < c.cycle.size(); ++j) s += (j ? "," : "") + c.cycle[j].str();
      s += "...";
    }
  }
  return s + ")";
}

Point halton_type_point(std::uint64_t n, const PlaceList& places, std::size_t precision) {
  return HaltonTypeSequence(places, precision).point(n);
}

}  // namespace ldseq
