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

#include <array>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hdp {

/// One splitmix64 step. Used for seeding and for deriving sub-stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Derives a sub-stream seed from a base seed and a list of tags.
/// Derivation is order-sensitive: derive_seed(s, {a, b}) != derive_seed(s, {b, a}).
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

/// Deterministic, platform-independent random stream (xoshiro256++ seeded
/// through splitmix64). Every randomized operation in the library takes an
/// explicit stream; there is no ambient RNG. Streams must not be shared
/// between concurrent callers: split work by deriving per-task seeds.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform double in [0, 1), 53-bit resolution.
  double next_unit();

  /// Uniform double in (0, 1), bin-centered so neither endpoint can occur.
  double next_unit_open();

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound);

  /// `count` distinct values from [0, population) \ {exclude}; pass
  /// population as exclude to exclude nothing. Result order is part of the
  /// deterministic contract.
  std::vector<std::uint32_t> sample_distinct(std::uint32_t population,
                                             std::uint32_t count,
                                             std::uint32_t exclude);

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::array<std::uint64_t, 4> state_;
};

namespace stream_tag {
// Fixed tags for derive_seed so call sites cannot collide by accident.
inline constexpr std::uint64_t kDataset = 0x01;
inline constexpr std::uint64_t kSplit = 0x02;
inline constexpr std::uint64_t kWeights = 0x03;
inline constexpr std::uint64_t kGroups = 0x04;
inline constexpr std::uint64_t kSim = 0x05;
inline constexpr std::uint64_t kSimInit = 0x06;
inline constexpr std::uint64_t kSimRound = 0x07;
inline constexpr std::uint64_t kPairScore = 0x08;
inline constexpr std::uint64_t kRandomViews = 0x09;
}  // namespace stream_tag

}  // namespace hdp
