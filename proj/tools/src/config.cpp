// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include "ldseq/error.hpp"
#include "ldseq/radinv.hpp"

#include "json.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ldseq::cli {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t e = s.size();
  while (a < e && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (e > a && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(a, e - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::uint64_t to_uint(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty())
    throw ConfigError("key '" + key + "' expects a nonnegative integer, got '" + text + "'");
  return v;
}

std::int64_t to_int(const std::string& key, const std::string& text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || p != end || text.empty())
    throw ConfigError("key '" + key + "' expects an integer, got '" + text + "'");
  return v;
}

// "a b (c d)": a b form the prefix and c d repeat. Without parentheses the
// whole list repeats; "a b ()" is a finite list.
std::pair<std::vector<std::string>, std::vector<std::string>> prefix_cycle(const std::string& key,
                                                                           const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return {{}, tokens(text)};
  const auto close = text.find(')', open);
  if (close == std::string::npos || trim(text.substr(close + 1)) != "")
    throw ConfigError("key '" + key + "': unbalanced parentheses in '" + text + "'");
  return {tokens(text.substr(0, open)), tokens(text.substr(open + 1, close - open - 1))};
}

std::vector<std::string> nonempty_list(const Config& cfg, const std::string& key) {
  const std::string v = cfg.get(key);
  if (v.empty()) throw ConfigError("key '" + key + "' is required for kind '" + cfg.get("kind") + "'");
  auto parts = split(v, ';');
  for (const auto& p : parts)
    if (p.empty()) throw ConfigError("key '" + key + "' has an empty entry");
  return parts;
}

std::uint32_t to_radix(const std::string& key, const std::string& t) {
  const auto v = to_uint(key, t);
  if (v < 2 || v > 0xffffffffULL) throw ConfigError("key '" + key + "': radix " + t + " out of range");
  return static_cast<std::uint32_t>(v);
}

Poly parse_poly(const FieldSpec& f, const std::string& key, const std::string& text) {
  try {
    return Poly::parse(f, text);
  } catch (const Error& e) {
    throw ConfigError("key '" + key + "': " + e.what());
  }
}

FieldSpec parse_field(const Config& cfg) {
  try {
    return FieldSpec::parse(cfg.get("field"));
  } catch (const Error& e) {
    throw ConfigError(std::string("key 'field': ") + e.what());
  }
}

}  // namespace

const std::vector<KeyInfo>& config_keys() {
  static const std::vector<KeyInfo> keys = {
      {"kind", "niederreiter", "niederreiter | halton | hellekalek | tezuka | halton-type | explicit-matrices"},
      {"field", "2", "digit field: \"2\", \"GF(4)\" or \"GF(4)=GF(2)[x]/(x^2+x+1)\""},
      {"polys", "x+1; x^2+x+1", "moduli for niederreiter/tezuka, one per coordinate, ';' separated"},
      {"places", "", "halton-type place lists, ';' per coordinate, each \"P1 P2 (P3 P4)\""},
      {"bases", "2,3", "halton prime bases, one per coordinate"},
      {"cantor", "2 3 5; 7 11 13", "hellekalek radix lists, ';' per coordinate, each \"q1 q2 (q3 q4)\""},
      {"matrices", "", "JSON file with explicit generating matrices"},
      {"gamma", "1/2; 1/3", "box corners for brs, ';' separated, coordinates ',' separated"},
      {"m", "8", "point set size b^m"},
      {"m_max", "12", "largest m in a brs profile"},
      {"precision", "64", "digits per coordinate"},
      {"t", "", "claimed t for verify (niederreiter default: e_0 - s)"},
      {"d", "", "admissibility parameter (niederreiter default: e_0)"},
      {"seed", "0", "seed for randomized checks"},
      {"n_start", "0", "first index for generate"},
      {"n_count", "", "number of points for generate and discrepancy (default b^m)"},
      {"output", "-", "output path, '-' for stdout"},
      {"format", "json", "json | csv | text"},
  };
  return keys;
}

Config::Config() {
  for (const auto& k : config_keys()) values_[k.key] = k.default_value;
}

void Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

void Config::load_text(std::string_view text, const std::string& origin) {
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void Config::set(const std::string& key, const std::string& value) {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  it->second = value;
}

bool Config::has(const std::string& key) const {
  auto it = values_.find(key);
  return it != values_.end() && !it->second.empty();
}

std::string Config::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("unknown config key '" + key + "'");
  return it->second;
}

std::uint64_t Config::get_uint(const std::string& key) const {
  if (!has(key)) throw ConfigError("key '" + key + "' is required");
  return to_uint(key, get(key));
}

std::optional<std::uint64_t> Config::get_opt_uint(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return to_uint(key, get(key));
}

std::int64_t Config::get_int(const std::string& key) const {
  if (!has(key)) throw ConfigError("key '" + key + "' is required");
  return to_int(key, get(key));
}

std::optional<std::int64_t> Config::get_opt_int(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return to_int(key, get(key));
}

BuiltSequence build_sequence(const Config& cfg) {
  BuiltSequence out;
  out.kind = cfg.get("kind");
  const std::uint64_t precision = cfg.get_uint("precision");
  if (precision == 0 || precision > 4096) throw ConfigError("key 'precision' must lie in [1, 4096]");
  const std::size_t L = precision;

  if (out.kind == "niederreiter" || out.kind == "tezuka") {
    const FieldSpec f = parse_field(cfg);
    std::vector<Poly> moduli;
    for (const auto& p : nonempty_list(cfg, "polys")) moduli.push_back(parse_poly(f, "polys", p));
    for (const auto& p : moduli) out.e0 += static_cast<std::size_t>(std::max(p.degree(), 0));
    out.base = f.order();
    if (out.kind == "niederreiter") {
      out.digital = niederreiter_matrices(moduli, {}, L);
      out.seq = std::make_unique<DigitalSequence>(*out.digital);
    } else {
      out.digital = tezuka_matrices(moduli, L);
      out.seq = std::make_unique<TezukaSequence>(moduli, L);
    }
  } else if (out.kind == "halton-type") {
    const FieldSpec f = parse_field(cfg);
    std::vector<PlaceList::Coordinate> coords;
    for (const auto& c : nonempty_list(cfg, "places")) {
      auto [pre, cyc] = prefix_cycle("places", c);
      PlaceList::Coordinate pc;
      for (const auto& t : pre) pc.prefix.push_back(parse_poly(f, "places", t));
      for (const auto& t : cyc) pc.cycle.push_back(parse_poly(f, "places", t));
      coords.push_back(std::move(pc));
    }
    PlaceList places(f, std::move(coords));
    out.base = f.order();
    out.digital = halton_type_matrices(places, L);
    out.seq = std::make_unique<HaltonTypeSequence>(places, L);
  } else if (out.kind == "halton") {
    std::vector<CantorBase> bases;
    std::string list = cfg.get("bases");
    for (auto& ch : list)
      if (ch == ',' || ch == ';') ch = ' ';
    for (const auto& t : tokens(list)) {
      const std::uint32_t q = to_radix("bases", t);
      if (!is_prime(q)) throw ConfigError("key 'bases': " + t + " is not prime");
      bases.push_back(CantorBase::constant(q));
    }
    if (bases.empty()) throw ConfigError("key 'bases' is required for kind 'halton'");
    out.base = bases.front().radix(0);
    for (const auto& b : bases)
      if (b.radix(0) != out.base) out.base = 0;
    out.seq = std::make_unique<HellekalekSequence>(std::move(bases), L);
  } else if (out.kind == "hellekalek") {
    std::vector<CantorBase> bases;
    for (const auto& c : nonempty_list(cfg, "cantor")) {
      auto [pre, cyc] = prefix_cycle("cantor", c);
      std::vector<std::uint32_t> p;
      std::vector<std::uint32_t> q;
      for (const auto& t : pre) p.push_back(to_radix("cantor", t));
      for (const auto& t : cyc) q.push_back(to_radix("cantor", t));
      bases.emplace_back(std::move(p), std::move(q));
    }
    out.base = 0;
    out.seq = std::make_unique<HellekalekSequence>(std::move(bases), L);
  } else if (out.kind == "explicit-matrices") {
    const std::string path = cfg.get("matrices");
    if (path.empty()) throw ConfigError("key 'matrices' is required for kind 'explicit-matrices'");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read matrices file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    out.digital = matrices_from_json(ss.str(), L);
    out.base = out.digital->field.order();
    out.seq = std::make_unique<DigitalSequence>(*out.digital);
  } else {
    throw ConfigError("unknown kind '" + out.kind + "'");
  }
  return out;
}

std::vector<GammaSpec> parse_gammas(const Config& cfg, std::uint32_t base) {
  std::vector<GammaSpec> out;
  for (const auto& g : nonempty_list(cfg, "gamma")) {
    try {
      out.push_back(GammaSpec::parse(base, g));
    } catch (const UsageError& e) {
      throw ConfigError(std::string("key 'gamma': ") + e.what());
    }
  }
  return out;
}

std::string matrices_to_json(const DigitalConfig& cfg, std::size_t rows, std::size_t cols) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = cfg.field.describe();
  j["rows"] = rows;
  j["cols"] = cols;
  j["matrices"] = nlohmann::ordered_json::array();
  for (const auto& m : cfg.matrices) j["matrices"].push_back(m.block(rows, cols));
  return j.dump();
}

DigitalConfig matrices_from_json(std::string_view text, std::size_t precision) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("matrices file is not valid JSON: ") + e.what());
  }
  try {
    DigitalConfig cfg{FieldSpec::parse(j.at("field").get<std::string>()), {}, precision};
    for (const auto& m : j.at("matrices")) {
      auto rows = m.get<std::vector<std::vector<std::uint32_t>>>();
      for (const auto& r : rows)
        for (auto v : r)
          if (v >= cfg.field.order()) throw ConfigError("matrix entry " + std::to_string(v) + " outside the field");
      cfg.matrices.push_back(GeneratingMatrix::explicit_rows(cfg.field, std::move(rows)));
    }
    if (cfg.matrices.empty()) throw ConfigError("matrices file lists no matrices");
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed matrices file: ") + e.what());
  } catch (const UsageError& e) {
    throw ConfigError(std::string("malformed matrices file: ") + e.what());
  }
}

}  // namespace ldseq::cli
