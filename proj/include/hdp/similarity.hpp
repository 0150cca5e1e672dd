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
#include <span>
#include <vector>

#include "hdp/dp_core.hpp"
#include "hdp/stretch.hpp"

namespace hdp {

/// A user profile: a sparse set of item identifiers drawn from a global
/// universe, i.e. a binary indicator vector stored as its support. Items are
/// kept sorted; universes of tens of thousands of items make dense per-pair
/// work wasteful.
class Profile {
 public:
  Profile(std::vector<std::uint32_t> items, std::uint32_t universe_size);

  std::span<const std::uint32_t> items() const { return items_; }
  std::uint32_t universe_size() const { return universe_size_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(std::uint32_t item) const;

 private:
  std::vector<std::uint32_t> items_;
  std::uint32_t universe_size_;
};

/// A profile plus one privacy weight per present item (aligned with the
/// sorted item list). Absent items contribute nothing to any query, so no
/// weight is stored for them.
class WeightedProfile {
 public:
  WeightedProfile(Profile profile, PrivacyVector weights);

  static WeightedProfile uniform(Profile profile, double weight = 1.0);

  const Profile& profile() const { return profile_; }
  const PrivacyVector& weights() const { return weights_; }

 private:
  Profile profile_;
  PrivacyVector weights_;
};

/// |X intersect Y| / sqrt(|X| * |Y|). Both profiles must be non-empty and
/// share a universe.
double cosine_exact(const Profile& x, const Profile& y);

/// Exact stretched scalar product sum_i vx_i * vy_i over common items; the
/// noiseless core of the HDP scalar product, also used by oracles.
double stretched_scalar_product(const WeightedProfile& x, const WeightedProfile& y);

/// HDP scalar product: both profiles are stretched by their own privacy
/// weights, then Laplace noise with the public scale S(SP)/epsilon = 1/epsilon
/// is added.
MechanismOutput hdp_scalar_product(const WeightedProfile& x, const WeightedProfile& y,
                                   PrivacyBudget budget, RandomStream& rng,
                                   NoiseMode noise = NoiseMode::laplace);

/// HDP cosine: the released scalar product divided by sqrt(|X| * |Y|) and
/// clamped to [0, 1]. Division and clamping only touch the released
/// numerator and the public sizes, so the privacy guarantee carries over.
/// The true (unnoised) profile sizes are used as denominators.
double hdp_cosine(const WeightedProfile& x, const WeightedProfile& y, PrivacyBudget budget,
                  RandomStream& rng, NoiseMode noise = NoiseMode::laplace);

}  // namespace hdp
