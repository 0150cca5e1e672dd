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

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hdp/dp_core.hpp"

namespace hdp::oracle {

using Evaluator = std::function<double(std::span<const double>)>;

/// A finite grid domain: one finite value set per coordinate. Used to
/// enumerate every neighboring pair exhaustively. Refuses domains with more
/// than 2^20 profiles.
class EnumerableDomain {
 public:
  explicit EnumerableDomain(std::vector<std::vector<double>> per_coordinate_values);

  /// {0,1} in every one of the n coordinates.
  static EnumerableDomain binary(std::size_t n);

  std::size_t dimension() const { return values_.size(); }
  std::uint64_t profile_count() const { return profile_count_; }
  const std::vector<double>& values(std::size_t coordinate) const { return values_[coordinate]; }

  /// Calls fn(profile) for every profile in lexicographic order.
  void for_each_profile(const std::function<void(std::span<const double>)>& fn) const;

 private:
  std::vector<std::vector<double>> values_;
  std::uint64_t profile_count_;
};

/// max |f(d) - f(d')| over all pairs differing in exactly one coordinate.
Sensitivity global_sensitivity_bruteforce(const Evaluator& f, const EnumerableDomain& domain);

/// Same maximum restricted to pairs differing exactly at `coordinate`.
Sensitivity modular_sensitivity_bruteforce(const Evaluator& f, const EnumerableDomain& domain,
                                           std::size_t coordinate);

/// Wraps f into the stretched function d -> f(diag(weights) * d).
Evaluator stretched_evaluator(Evaluator f, std::vector<double> weights);

}  // namespace hdp::oracle
