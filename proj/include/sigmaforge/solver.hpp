#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "sigmaforge/graph.hpp"
#include "sigmaforge/labeling.hpp"
#include "sigmaforge/search.hpp"

namespace sigmaforge {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SolveResult {
  std::optional<int> value;
  std::optional<Labeling> witness;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

struct MinPartResult {
  std::optional<int> min_size;
  std::optional<VertexSetPartition> witness;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

/// Smallest k <= max_k with a sigma k-partition.
SolveResult sigma_number(const Graph& g, int max_k, std::uint64_t budget = kDefaultBudget);
/// Smallest k <= max_k with a lucky labeling from {1..k}.
SolveResult lucky_number(const Graph& g, int max_k, std::uint64_t budget = kDefaultBudget);

/// Existence of a valid labeling from {1,2}. value is 2 on yes, absent on no.
SolveResult decide_two(const Graph& g, Mode mode, std::uint64_t budget = kDefaultBudget);

/// Minimum of min(|V1|,|V2|) over sigma 2-partitions.
/// Throws PromiseError when the search proves no 2-partition exists.
MinPartResult min_part_size(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// decide_two in both modes; throws InputError on non-regular input and
/// BudgetError if either side is inconclusive.
bool regular_sigma2_iff_eta2(const Graph& g, std::uint64_t budget = kDefaultBudget);

nlohmann::json labeling_json(const Labeling& lab);
nlohmann::json partition_json(const VertexSetPartition& part);
/// Reads {"k": int, "labels": [...]} and validates labels against k.
Labeling labeling_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const MinPartResult& r);

}  // namespace sigmaforge
