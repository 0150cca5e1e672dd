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

#include "hdp/random.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hdp/errors.hpp"

namespace hdp {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t state = base;
  std::uint64_t out = splitmix64(state);
  for (std::uint64_t tag : tags) {
    state ^= tag + 0x9e3779b97f4a7c15ULL + (state << 6) + (state >> 2);
    out = splitmix64(state);
  }
  return out;
}

namespace {
inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}
}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) {
    word = splitmix64(sm);
  }
}

std::uint64_t RandomStream::next_u64() {
  // xoshiro256++ by Blackman and Vigna.
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RandomStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_unit_open() {
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  if (bound == 0) {
    throw InvalidParameterError("next_below: bound must be positive");
  }
  // Unbiased via rejection on the top of the range.
  const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
  std::uint64_t draw;
  do {
    draw = next_u64();
  } while (draw >= limit);
  return draw % bound;
}

std::vector<std::uint32_t> RandomStream::sample_distinct(std::uint32_t population,
                                                         std::uint32_t count,
                                                         std::uint32_t exclude) {
  const std::uint32_t available = population - (exclude < population ? 1 : 0);
  if (count > available) {
    throw InvalidParameterError("sample_distinct: count exceeds population");
  }
  std::vector<std::uint32_t> picked;
  picked.reserve(count);
  if (count * 2 >= available) {
    // Dense sample: partial Fisher-Yates over the whole population.
    std::vector<std::uint32_t> pool;
    pool.reserve(available);
    for (std::uint32_t v = 0; v < population; ++v) {
      if (v != exclude) pool.push_back(v);
    }
    for (std::uint32_t i = 0; i < count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(next_below(pool.size() - i));
      std::swap(pool[i], pool[j]);
      picked.push_back(pool[i]);
    }
    return picked;
  }
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(count * 2);
  while (picked.size() < count) {
    const auto v = static_cast<std::uint32_t>(next_below(population));
    if (v == exclude || !seen.insert(v).second) continue;
    picked.push_back(v);
  }
  return picked;
}

}  // namespace hdp
