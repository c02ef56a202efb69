// Copyright 2026 The ldseq Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ldseq {

/// Error categories. The numeric values double as CLI exit codes, except
/// that usage and domain errors are reported as configuration errors there.
enum class ErrorKind {
  kUsage,          // precondition violated by the caller
  kDomain,         // mathematically undefined (inv(0), division by zero polynomial)
  kConfig,         // construction parameters violate a structural requirement
  kCertification,  // finite precision cannot decide an exact question
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(ErrorKind::kUsage, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::kDomain, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::kConfig, what) {}
};

class CertificationError : public Error {
 public:
  explicit CertificationError(const std::string& what) : Error(ErrorKind::kCertification, what) {}
};

}  // namespace ldseq
