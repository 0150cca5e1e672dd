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
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "hdp/similarity.hpp"

namespace hdp::gossip {

using NodeId = std::uint32_t;

/// The only data a node learns about a peer: its id, the released similarity
/// score, and the round the score was computed in. Raw profiles and privacy
/// weights never travel between nodes; keep it that way.
struct ViewEntry {
  NodeId peer;
  double score;
  std::uint32_t round_scored;
};

static_assert(std::is_trivially_copyable_v<ViewEntry> && std::is_standard_layout_v<ViewEntry>);

/// A node's current k-nearest-neighbor candidates, sorted by descending
/// score with ties broken by lower peer id. Ids are unique and never include
/// the owner.
class ClusterView {
 public:
  ClusterView() = default;

  /// Keeps the best k of `candidates` (descending score, then lower id).
  static ClusterView top_k(std::vector<ViewEntry> candidates, std::size_t k);

  std::span<const ViewEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool contains(NodeId peer) const;

 private:
  std::vector<ViewEntry> entries_;
};

enum class ScoringMode {
  hdp,          // noisy HDP cosine on weighted training profiles
  exact,        // plain cosine, no weights, no noise (the baseline arm)
  random_views  // no scoring at all: views are uniform random peers
};

struct SimConfig {
  std::uint32_t node_count = 0;
  std::uint32_t k = 0;
  std::uint32_t rounds = 20;
  std::uint32_t rps_size = 8;
  double epsilon = 1.0;  // used by hdp scoring only
  ScoringMode mode = ScoringMode::hdp;
  NoiseMode noise = NoiseMode::laplace;  // test hook, hdp mode only
  std::uint64_t seed = 0;
  bool collect_trace = false;

  void validate() const;
};

/// Per-node input: the training profile (with its privacy weights) plus the
/// held-out test items used later for recall.
struct NodeData {
  WeightedProfile training;
  std::vector<std::uint32_t> test_items;
};

struct TraceRecord {
  std::uint32_t round;  // 0 is the state right after init
  NodeId node;
  std::vector<ViewEntry> view;
};

struct ClusteringResult {
  std::vector<ClusterView> views;
  std::vector<TraceRecord> trace;
  std::uint64_t similarity_evaluations = 0;
};

/// Deterministic discrete-round simulation. Nodes are processed in
/// ascending id order; all reads within a round see the round-start state
/// (double-buffered views), so a concurrent implementation must produce the
/// same result. One similarity evaluation spends one budget-epsilon
/// mechanism call; scores are cached per ordered pair and never refreshed.
class Simulation {
 public:
  Simulation(const SimConfig& config, const std::vector<NodeData>& dataset);

  void init_views();
  void run_round(std::uint32_t round_index);

  const std::vector<ClusterView>& views() const { return views_; }
  std::span<const NodeId> rps_sample(NodeId node) const { return rps_[node]; }
  std::uint64_t similarity_evaluations() const { return evaluations_; }

 private:
  double score(NodeId owner, NodeId peer);
  ViewEntry scored_entry(NodeId owner, NodeId peer, std::uint32_t round);

  const SimConfig config_;
  const std::vector<NodeData>& dataset_;
  std::vector<ClusterView> views_;
  std::vector<std::vector<NodeId>> rps_;
  std::unordered_map<std::uint64_t, double> score_cache_;
  std::unordered_map<std::uint64_t, std::uint32_t> score_round_;
  std::uint64_t evaluations_ = 0;
};

/// init_views followed by `rounds` gossip rounds; bit-identical results for
/// identical (config, dataset, seed).
ClusteringResult run_clustering(const SimConfig& config, const std::vector<NodeData>& dataset);

}  // namespace hdp::gossip
