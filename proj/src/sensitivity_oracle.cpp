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

#include "hdp/sensitivity_oracle.hpp"

#include <cmath>

#include "hdp/errors.hpp"

namespace hdp::oracle {

namespace {
constexpr std::uint64_t kMaxProfiles = std::uint64_t{1} << 20;
}

EnumerableDomain::EnumerableDomain(std::vector<std::vector<double>> per_coordinate_values)
    : values_(std::move(per_coordinate_values)) {
  if (values_.empty()) {
    throw InvalidParameterError("domain needs at least one coordinate");
  }
  profile_count_ = 1;
  for (const auto& set : values_) {
    if (set.empty()) {
      throw InvalidParameterError("every coordinate needs at least one value");
    }
    if (profile_count_ > kMaxProfiles / set.size()) {
      throw CapacityError("domain exceeds the 2^20 profile enumeration cap");
    }
    profile_count_ *= set.size();
  }
}

EnumerableDomain EnumerableDomain::binary(std::size_t n) {
  return EnumerableDomain(std::vector<std::vector<double>>(n, {0.0, 1.0}));
}

void EnumerableDomain::for_each_profile(
    const std::function<void(std::span<const double>)>& fn) const {
  const std::size_t n = dimension();
  std::vector<std::size_t> index(n, 0);
  std::vector<double> point(n);
  for (std::size_t i = 0; i < n; ++i) point[i] = values_[i][0];
  while (true) {
    fn(point);
    // Lexicographic odometer, least-significant coordinate last.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++index[k] < values_[k].size()) {
        point[k] = values_[k][index[k]];
        break;
      }
      index[k] = 0;
      point[k] = values_[k][0];
      if (k == 0) return;
    }
  }
}

namespace {

double max_over_neighbors(const Evaluator& f, const EnumerableDomain& domain,
                          std::size_t coordinate_lo, std::size_t coordinate_hi) {
  double worst = 0.0;
  std::vector<double> neighbor(domain.dimension());
  domain.for_each_profile([&](std::span<const double> profile) {
    const double base = f(profile);
    neighbor.assign(profile.begin(), profile.end());
    for (std::size_t i = coordinate_lo; i < coordinate_hi; ++i) {
      for (double alternative : domain.values(i)) {
        if (alternative == profile[i]) continue;
        neighbor[i] = alternative;
        const double diff = std::abs(base - f(neighbor));
        if (diff > worst) worst = diff;
      }
      neighbor[i] = profile[i];
    }
  });
  return worst;
}

}  // namespace

Sensitivity global_sensitivity_bruteforce(const Evaluator& f, const EnumerableDomain& domain) {
  return Sensitivity(max_over_neighbors(f, domain, 0, domain.dimension()));
}

Sensitivity modular_sensitivity_bruteforce(const Evaluator& f, const EnumerableDomain& domain,
                                           std::size_t coordinate) {
  if (coordinate >= domain.dimension()) {
    throw InvalidParameterError("coordinate out of range");
  }
  return Sensitivity(max_over_neighbors(f, domain, coordinate, coordinate + 1));
}

Evaluator stretched_evaluator(Evaluator f, std::vector<double> weights) {
  return [f = std::move(f), weights = std::move(weights)](std::span<const double> d) {
    if (d.size() != weights.size()) {
      throw InvalidParameterError("stretched evaluator: dimension mismatch");
    }
    std::vector<double> scaled(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) scaled[i] = weights[i] * d[i];
    return f(scaled);
  };
}

}  // namespace hdp::oracle
