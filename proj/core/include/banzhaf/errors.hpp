// Copyright 2026 The Banzhaf Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace banzhaf {

// Base class for every recoverable failure the library reports.
// The CLI maps these to exit code 1; anything else is a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument values: index out of range, bad epsilon/delta, empty
// dataset, mismatched feature sets, ...
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An exhaustive computation was asked to exceed its configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Exact decimal scaling produced a non-integer value.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Malformed input files: model JSON, CSV cells, reports.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Training cannot proceed (e.g. single-class training split).
class TrainingError : public Error {
 public:
  using Error::Error;
};

// Network fetch or checksum verification failed.
class FetchError : public Error {
 public:
  using Error::Error;
};

}  // namespace banzhaf
