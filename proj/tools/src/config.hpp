// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ldseq/brs.hpp"
#include "ldseq/digital.hpp"
#include "ldseq/digits.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldseq::cli {

inline constexpr int kSchemaVersion = 1;

struct KeyInfo {
  std::string key;
  std::string default_value;  // empty: unset
  std::string help;
};

/// Every recognized configuration key, in documentation order.
const std::vector<KeyInfo>& config_keys();

/// Key-value experiment configuration. Values stay as text until a command
/// asks for them.
class Config {
 public:
  Config();

  /// Reads "key = value" lines; '#' starts a comment. ConfigError on unknown
  /// keys, malformed lines or an unreadable file.
  void load_file(const std::string& path);
  void load_text(std::string_view text, const std::string& origin);
  /// ConfigError for unknown keys.
  void set(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;
  std::string get(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::optional<std::uint64_t> get_opt_uint(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::optional<std::int64_t> get_opt_int(const std::string& key) const;

  const std::map<std::string, std::string>& values() const noexcept { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Sequence described by a configuration.
struct BuiltSequence {
  std::string kind;
  std::unique_ptr<PointSequence> seq;
  std::optional<DigitalConfig> digital;
  std::uint32_t base = 0;  // common digit base, 0 when coordinates differ
  std::size_t e0 = 0;      // sum of modulus degrees for niederreiter
};

BuiltSequence build_sequence(const Config& cfg);

/// Semicolon separated gamma list, each parsed in `base`.
std::vector<GammaSpec> parse_gammas(const Config& cfg, std::uint32_t base);

/// Row-major JSON export of the upper-left rows x cols blocks.
std::string matrices_to_json(const DigitalConfig& cfg, std::size_t rows, std::size_t cols);
/// Inverse of matrices_to_json; ConfigError on malformed input.
DigitalConfig matrices_from_json(std::string_view text, std::size_t precision);

}  // namespace ldseq::cli
