// Copyright 2026 qwalknet contributors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qwalknet {

/// Malformed or missing user input (bad flags, bad parameters).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// File-system level failures (missing files, parse errors, write failures).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Seeded graph generation could not satisfy the structural invariants.
class GenerationError : public std::runtime_error {
 public:
  explicit GenerationError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A computation exceeded a configured resource bound (qubits, matrix size).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Numerical invariant violated (norms, finiteness, normalization).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace qwalknet
