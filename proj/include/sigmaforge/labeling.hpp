#pragma once

#include <cstdint>
#include <vector>

#include "sigmaforge/graph.hpp"

namespace sigmaforge {

/// Total map vertex -> part index in 1..k.
class VertexSetPartition {
 public:
  VertexSetPartition() = default;
  /// Throws InputError if some entry lies outside 1..k.
  VertexSetPartition(int k, std::vector<int> part_of);

  int k() const noexcept { return k_; }
  int part(Vertex v) const { return part_of_.at(static_cast<std::size_t>(v)); }
  const std::vector<int>& parts() const noexcept { return part_of_; }
  int size() const noexcept { return static_cast<int>(part_of_.size()); }
  int part_size(int part) const;

  bool operator==(const VertexSetPartition&) const = default;

 private:
  int k_ = 1;
  std::vector<int> part_of_;
};

/// Total map vertex -> positive integer label.
///
/// Labels are capped at kMaxLabel so that neighborhood sums of graphs with
/// degree up to kMaxDegree stay exact in 64-bit arithmetic.
struct Labeling {
  static constexpr std::int64_t kMaxLabel = std::int64_t{1} << 20;
  static constexpr int kMaxDegree = 1 << 20;

  int k = 1;  ///< number of labels in play (labels are 1..k for lucky labelings)
  std::vector<std::int64_t> label_of;

  bool operator==(const Labeling&) const = default;
};

/// Entry i (0-based) counts neighbors of v in part i+1.
using NeighborCountVector = std::vector<int>;

NeighborCountVector neighbor_count_vector(const Graph& g, const VertexSetPartition& part, Vertex v);

/// Every edge uv has differing neighbor-count vectors.
bool is_sigma_coloring(const Graph& g, const VertexSetPartition& part);

/// Every edge uv has differing neighborhood label sums.
bool is_lucky_labeling(const Graph& g, const Labeling& lab);

/// Part indices used directly as numeric labels.
Labeling to_labeling(const VertexSetPartition& part);
/// Groups equal labels; the i-th smallest distinct label becomes part i.
VertexSetPartition to_partition(const Labeling& lab);

/// Labels vertex v with s^(part(v)-1).
Labeling power_labeling(const VertexSetPartition& part, std::int64_t s);

/// For a labeling over {s^0..s^(k-1)} with s >= max_degree+1, reports whether
/// lucky validity of the numeric labels agrees with sigma validity of the
/// induced partition. Throws InputError if labels are not powers of such an s.
bool sigma_equals_lucky_for_labels(const Graph& g, const Labeling& lab, std::int64_t s);

/// True iff every edge joins vertices of different degree (sigma = lucky = 1).
bool adjacent_degrees_differ(const Graph& g);

}  // namespace sigmaforge
