// Copyright (c) 2026 the ransim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ransim {

// Status codes shared with the C API and the CLI exit codes.
enum class Status : int {
  Ok = 0,
  ConfigError = 2,
  RuntimeError = 3,
  IncompleteSweep = 4,
  FileMissing = 5,
  ChecksumMismatch = 6,
  InvalidArg = 7,
};

class Error : public std::runtime_error {
 public:
  Error(Status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  Status status() const { return status_; }

 private:
  Status status_;
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(Status::ConfigError, what) {}
};
struct FileMissingError : Error {
  explicit FileMissingError(const std::string& what) : Error(Status::FileMissing, what) {}
};
struct ChecksumError : Error {
  explicit ChecksumError(const std::string& what) : Error(Status::ChecksumMismatch, what) {}
};
struct RuntimeError : Error {
  explicit RuntimeError(const std::string& what) : Error(Status::RuntimeError, what) {}
};
struct IncompleteSweepError : Error {
  explicit IncompleteSweepError(const std::string& what)
      : Error(Status::IncompleteSweep, what) {}
};
// Out-of-domain argument to a model function (never silently clamped).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(Status::RuntimeError, what) {}
};

}  // namespace ransim
