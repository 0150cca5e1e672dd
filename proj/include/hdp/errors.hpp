// Copyright 2026 The hdplib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hdp {

/// Base class for all hdplib errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a precondition (bad sigma, dimension
/// mismatch, out-of-range weight, ...).
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// A component broke one of its documented guarantees, e.g. a
/// modular-sensitivity evaluator that is not monotone in the weight.
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

/// The query does not support the requested operation (e.g. no gradient).
class UnsupportedQueryError : public Error {
 public:
  using Error::Error;
};

/// Similarity is undefined for the given profiles (empty profile).
class UndefinedSimilarityError : public Error {
 public:
  using Error::Error;
};

/// A brute-force domain exceeds the enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Configuration file could not be parsed or validated. Carries a position
/// when one is known (1-based line/column; 0 when not applicable).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& message, int line = 0, int column = 0)
      : Error(message), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hdp
