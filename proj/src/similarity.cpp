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

#include "hdp/similarity.hpp"

#include <algorithm>
#include <cmath>

#include "hdp/errors.hpp"

namespace hdp {

Profile::Profile(std::vector<std::uint32_t> items, std::uint32_t universe_size)
    : items_(std::move(items)), universe_size_(universe_size) {
  if (universe_size_ == 0) {
    throw InvalidParameterError("universe must not be empty");
  }
  std::sort(items_.begin(), items_.end());
  if (std::adjacent_find(items_.begin(), items_.end()) != items_.end()) {
    throw InvalidParameterError("profile contains duplicate items");
  }
  if (!items_.empty() && items_.back() >= universe_size_) {
    throw InvalidParameterError("item identifier outside the universe");
  }
}

bool Profile::contains(std::uint32_t item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

WeightedProfile::WeightedProfile(Profile profile, PrivacyVector weights)
    : profile_(std::move(profile)), weights_(std::move(weights)) {
  if (weights_.size() != profile_.size()) {
    throw InvalidParameterError("one privacy weight per present item required");
  }
}

WeightedProfile WeightedProfile::uniform(Profile profile, double weight) {
  const std::size_t n = profile.size();
  if (n == 0) {
    throw InvalidParameterError("weighted profile must not be empty");
  }
  return WeightedProfile(std::move(profile), PrivacyVector(std::vector<double>(n, weight)));
}

namespace {

void require_same_universe(const Profile& x, const Profile& y) {
  if (x.universe_size() != y.universe_size()) {
    throw InvalidParameterError("profiles live in different universes");
  }
}

std::size_t intersection_size(const Profile& x, const Profile& y) {
  std::size_t count = 0;
  auto a = x.items().begin();
  auto b = y.items().begin();
  while (a != x.items().end() && b != y.items().end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

}  // namespace

double cosine_exact(const Profile& x, const Profile& y) {
  require_same_universe(x, y);
  if (x.empty() || y.empty()) {
    throw UndefinedSimilarityError("cosine similarity of an empty profile is undefined");
  }
  const double common = static_cast<double>(intersection_size(x, y));
  return common / std::sqrt(static_cast<double>(x.size()) * static_cast<double>(y.size()));
}

double stretched_scalar_product(const WeightedProfile& x, const WeightedProfile& y) {
  require_same_universe(x.profile(), y.profile());
  double sum = 0.0;
  const auto xi = x.profile().items();
  const auto yi = y.profile().items();
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < xi.size() && b < yi.size()) {
    if (xi[a] < yi[b]) {
      ++a;
    } else if (yi[b] < xi[a]) {
      ++b;
    } else {
      sum += x.weights()[a] * y.weights()[b];
      ++a;
      ++b;
    }
  }
  return sum;
}

MechanismOutput hdp_scalar_product(const WeightedProfile& x, const WeightedProfile& y,
                                   PrivacyBudget budget, RandomStream& rng, NoiseMode noise) {
  // S(SP) = 1 on binary profiles, so the public noise scale is 1/epsilon.
  return laplacian_mechanism(stretched_scalar_product(x, y), Sensitivity(1.0), budget, rng,
                             noise);
}

double hdp_cosine(const WeightedProfile& x, const WeightedProfile& y, PrivacyBudget budget,
                  RandomStream& rng, NoiseMode noise) {
  if (x.profile().empty() || y.profile().empty()) {
    throw UndefinedSimilarityError("cosine similarity of an empty profile is undefined");
  }
  const MechanismOutput numerator = hdp_scalar_product(x, y, budget, rng, noise);
  const double denominator = std::sqrt(static_cast<double>(x.profile().size()) *
                                       static_cast<double>(y.profile().size()));
  return std::clamp(numerator.released() / denominator, 0.0, 1.0);
}

}  // namespace hdp
