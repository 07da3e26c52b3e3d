// Copyright 2026 The leontief Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leontief {

enum class ErrorKind {
  Domain,          // a value violates a mathematical precondition
  Spec,            // inconsistent generator / policy parameters
  Identification,  // a fit is not identified by the data
  Ordering,        // input was required to be output-ordered and is not
  Config,          // configuration parse or validation failure
  Io,
};

/// Stable class name used as the machine-parsable prefix of CLI errors.
std::string_view error_class(ErrorKind kind) noexcept;

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class SpecError : public Error {
 public:
  explicit SpecError(const std::string& what) : Error(ErrorKind::Spec, what) {}
};

class IdentificationError : public Error {
 public:
  explicit IdentificationError(const std::string& what)
      : Error(ErrorKind::Identification, what) {}
};

class OrderingError : public Error {
 public:
  explicit OrderingError(const std::string& what) : Error(ErrorKind::Ordering, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

}  // namespace leontief
