#include "sigmaforge/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

namespace {

SearchConfig config_for(Mode mode, int k) {
  SearchConfig cfg;
  cfg.mode = mode;
  cfg.k = k;
  if (mode == Mode::lucky) {
    cfg.twin_ordering = true;
  } else if (k == 2) {
    cfg.twin_ordering = true;
    cfg.pin_vertex_zero = true;
  } else if (k >= 3) {
    cfg.value_symmetry = true;
  }
  return cfg;
}

void verify_or_die(const Graph& g, Mode mode, const Labeling& lab) {
  const bool ok = mode == Mode::sigma ? is_sigma_coloring(g, VertexSetPartition(lab.k, {lab.label_of.begin(), lab.label_of.end()}))
                                      : is_lucky_labeling(g, lab);
  if (!ok) throw std::logic_error(std::string("solver produced an invalid ") + mode_name(mode) + " witness");
}

Labeling make_labeling(int k, const std::vector<int>& labels) {
  Labeling lab;
  lab.k = k;
  lab.label_of.assign(labels.begin(), labels.end());
  return lab;
}

SolveResult smallest_k(const Graph& g, Mode mode, int max_k, std::uint64_t budget) {
  if (max_k < 1) throw InputError("max_k must be at least 1");
  if (max_k > 31) throw InputError("max_k above 31 is not supported");
  SolveResult result;
  for (int k = 1; k <= max_k; ++k) {
    LabelSearch search(g, config_for(mode, k));
    std::vector<int> labels;
    const auto status = search.find(budget - result.nodes, labels);
    result.nodes += search.nodes();
    if (status == LabelSearch::Status::budget) return result;
    if (status == LabelSearch::Status::found) {
      result.value = k;
      result.witness = make_labeling(k, labels);
      result.exhausted = true;
      verify_or_die(g, mode, *result.witness);
      return result;
    }
  }
  result.exhausted = true;
  return result;
}

}  // namespace

SolveResult sigma_number(const Graph& g, int max_k, std::uint64_t budget) {
  return smallest_k(g, Mode::sigma, max_k, budget);
}

SolveResult lucky_number(const Graph& g, int max_k, std::uint64_t budget) {
  return smallest_k(g, Mode::lucky, max_k, budget);
}

SolveResult decide_two(const Graph& g, Mode mode, std::uint64_t budget) {
  LabelSearch search(g, config_for(mode, 2));
  std::vector<int> labels;
  const auto status = search.find(budget, labels);
  SolveResult result;
  result.nodes = search.nodes();
  result.exhausted = status != LabelSearch::Status::budget;
  if (status == LabelSearch::Status::found) {
    result.value = 2;
    result.witness = make_labeling(2, labels);
    verify_or_die(g, mode, *result.witness);
  }
  return result;
}

MinPartResult min_part_size(const Graph& g, std::uint64_t budget) {
  SearchConfig cfg;
  cfg.mode = Mode::sigma;
  cfg.k = 2;
  cfg.twin_ordering = true;
  cfg.descending_values = true;
  LabelSearch search(g, cfg);
  std::vector<int> labels;
  int best = -1;
  const auto status = search.minimize_label_one(budget, labels, best);
  MinPartResult result;
  result.nodes = search.nodes();
  if (status == LabelSearch::Status::exhausted)
    throw PromiseError("graph has no sigma 2-partition; minimum part size is undefined");
  result.exhausted = status == LabelSearch::Status::found;
  if (best >= 0) {
    VertexSetPartition part(2, labels);
    if (!is_sigma_coloring(g, part)) throw std::logic_error("min_part_size produced an invalid witness");
    result.min_size = std::min(part.part_size(1), part.part_size(2));
    result.witness = std::move(part);
  }
  return result;
}

bool regular_sigma2_iff_eta2(const Graph& g, std::uint64_t budget) {
  if (regular_degree(g) < 0) throw InputError("graph is not regular");
  const auto sigma = decide_two(g, Mode::sigma, budget);
  const auto lucky = decide_two(g, Mode::lucky, budget);
  if (!sigma.exhausted || !lucky.exhausted) throw BudgetError("decide_two ran out of budget");
  return sigma.value.has_value() == lucky.value.has_value();
}

nlohmann::json labeling_json(const Labeling& lab) { return {{"k", lab.k}, {"labels", lab.label_of}}; }

nlohmann::json partition_json(const VertexSetPartition& part) {
  return {{"k", part.k()}, {"labels", part.parts()}};
}

Labeling labeling_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("labels"))
    throw InputError("labeling JSON needs 'k' and 'labels'");
  Labeling lab;
  try {
    lab.k = j.at("k").get<int>();
    lab.label_of = j.at("labels").get<std::vector<std::int64_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed labeling JSON: ") + e.what());
  }
  if (lab.k < 1) throw InputError("labeling k must be at least 1");
  for (auto l : lab.label_of)
    if (l < 1 || l > lab.k) throw InputError("label " + std::to_string(l) + " outside 1.." + std::to_string(lab.k));
  return lab;
}

nlohmann::json to_json(const SolveResult& r) {
  nlohmann::json j;
  j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
  j["exhausted"] = r.exhausted;
  j["nodes"] = r.nodes;
  j["witness"] = r.witness ? labeling_json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const MinPartResult& r) {
  nlohmann::json j;
  j["value"] = r.min_size ? nlohmann::json(*r.min_size) : nlohmann::json(nullptr);
  j["exhausted"] = r.exhausted;
  j["nodes"] = r.nodes;
  j["witness"] = r.witness ? partition_json(*r.witness) : nlohmann::json(nullptr);
  return j;
}

}  // namespace sigmaforge
