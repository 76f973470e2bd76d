// Copyright 2026 The prqc developers.
//
// This source code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of the license at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace prqc {

/// Error taxonomy shared by the C++ core and the C API.
enum class ErrorCode {
  argument,             ///< bad parameter (index out of range, shape mismatch, ...)
  validation,           ///< input violates a numeric contract (non-unitary gate, ...)
  capacity,             ///< request exceeds the dense-simulation size guards
  parse,                ///< malformed document
  unsupported_version,  ///< document version tag not understood
  numerical,            ///< a numeric routine failed or produced out-of-contract output
  mode                  ///< operation requires a different simulation mode
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& what) : Error(ErrorCode::argument, what) {}
};

struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(ErrorCode::validation, what) {}
};

struct CapacityError : Error {
  explicit CapacityError(const std::string& what) : Error(ErrorCode::capacity, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

struct UnsupportedVersionError : Error {
  explicit UnsupportedVersionError(const std::string& what)
      : Error(ErrorCode::unsupported_version, what) {}
};

struct NumericalError : Error {
  explicit NumericalError(const std::string& what) : Error(ErrorCode::numerical, what) {}
};

struct ModeError : Error {
  explicit ModeError(const std::string& what) : Error(ErrorCode::mode, what) {}
};

}  // namespace prqc
