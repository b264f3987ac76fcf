#include "sigmaforge/labeling.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

VertexSetPartition::VertexSetPartition(int k, std::vector<int> part_of) : k_(k), part_of_(std::move(part_of)) {
  if (k_ < 1) throw InputError("partition needs k >= 1");
  for (std::size_t v = 0; v < part_of_.size(); ++v)
    if (part_of_[v] < 1 || part_of_[v] > k_)
      throw InputError("vertex " + std::to_string(v) + " has part " + std::to_string(part_of_[v]) + " outside 1.." +
                       std::to_string(k_));
}

int VertexSetPartition::part_size(int part) const {
  return static_cast<int>(std::count(part_of_.begin(), part_of_.end(), part));
}

namespace {

void require_covers(const Graph& g, std::size_t size, const char* what) {
  if (size != static_cast<std::size_t>(g.vertex_count()))
    throw InputError(std::string(what) + " covers " + std::to_string(size) + " vertices, graph has " +
                     std::to_string(g.vertex_count()));
}

std::int64_t neighborhood_sum(const Graph& g, const Labeling& lab, Vertex v) {
  std::int64_t sum = 0;
  for (Vertex w : g.neighbors(v)) sum += lab.label_of[static_cast<std::size_t>(w)];
  return sum;
}

}  // namespace

NeighborCountVector neighbor_count_vector(const Graph& g, const VertexSetPartition& part, Vertex v) {
  require_covers(g, static_cast<std::size_t>(part.size()), "partition");
  NeighborCountVector counts(static_cast<std::size_t>(part.k()), 0);
  for (Vertex w : g.neighbors(v)) ++counts[static_cast<std::size_t>(part.part(w) - 1)];
  return counts;
}

bool is_sigma_coloring(const Graph& g, const VertexSetPartition& part) {
  require_covers(g, static_cast<std::size_t>(part.size()), "partition");
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) != g.degree(v)) continue;  // vector sums differ
    if (neighbor_count_vector(g, part, u) == neighbor_count_vector(g, part, v)) return false;
  }
  return true;
}

bool is_lucky_labeling(const Graph& g, const Labeling& lab) {
  require_covers(g, lab.label_of.size(), "labeling");
  if (g.max_degree() > Labeling::kMaxDegree) throw InputError("graph degree exceeds the supported cap");
  for (auto label : lab.label_of)
    if (label < 1 || label > Labeling::kMaxLabel)
      throw InputError("label " + std::to_string(label) + " outside 1..2^20");
  for (const auto& [u, v] : g.edges())
    if (neighborhood_sum(g, lab, u) == neighborhood_sum(g, lab, v)) return false;
  return true;
}

Labeling to_labeling(const VertexSetPartition& part) {
  Labeling lab;
  lab.k = part.k();
  lab.label_of.assign(part.parts().begin(), part.parts().end());
  return lab;
}

VertexSetPartition to_partition(const Labeling& lab) {
  std::map<std::int64_t, int> index;
  for (auto label : lab.label_of) index.emplace(label, 0);
  int next = 1;
  for (auto& [label, idx] : index) idx = next++;
  std::vector<int> parts;
  parts.reserve(lab.label_of.size());
  for (auto label : lab.label_of) parts.push_back(index.at(label));
  return VertexSetPartition(std::max(1, static_cast<int>(index.size())), std::move(parts));
}

Labeling power_labeling(const VertexSetPartition& part, std::int64_t s) {
  if (s < 2) throw InputError("power base must be at least 2");
  std::vector<std::int64_t> powers{1};
  for (int i = 1; i < part.k(); ++i) {
    if (powers.back() > Labeling::kMaxLabel / s) throw InputError("s^(k-1) exceeds the label cap");
    powers.push_back(powers.back() * s);
  }
  Labeling lab;
  lab.k = part.k();
  for (int p : part.parts()) lab.label_of.push_back(powers[static_cast<std::size_t>(p - 1)]);
  return lab;
}

bool sigma_equals_lucky_for_labels(const Graph& g, const Labeling& lab, std::int64_t s) {
  require_covers(g, lab.label_of.size(), "labeling");
  if (s < static_cast<std::int64_t>(g.max_degree()) + 1)
    throw InputError("base s=" + std::to_string(s) + " is below max degree + 1");
  std::vector<int> exponent;
  exponent.reserve(lab.label_of.size());
  int k = 1;
  for (auto label : lab.label_of) {
    int e = 0;
    std::int64_t x = label;
    while (x > 1 && x % s == 0) {
      x /= s;
      ++e;
    }
    if (x != 1) throw InputError("label " + std::to_string(label) + " is not a power of " + std::to_string(s));
    exponent.push_back(e + 1);
    k = std::max(k, e + 1);
  }
  const VertexSetPartition part(k, std::move(exponent));
  return is_lucky_labeling(g, lab) == is_sigma_coloring(g, part);
}

bool adjacent_degrees_differ(const Graph& g) {
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return g.degree(e.first) == g.degree(e.second); });
}

}  // namespace sigmaforge
