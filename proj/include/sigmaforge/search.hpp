#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sigmaforge/graph.hpp"

namespace sigmaforge {

enum class Mode { sigma, lucky };

const char* mode_name(Mode mode);
/// Accepts "sigma" or "lucky"; throws InputError otherwise.
Mode parse_mode(std::string_view text);

struct SearchConfig {
  Mode mode = Mode::sigma;
  int k = 2;
  /// Lex order inside twin classes (strict for closed twins).
  bool twin_ordering = false;
  /// Pins vertex 0 to label 1. Only sound when labels are interchangeable.
  bool pin_vertex_zero = false;
  /// At each branch try used labels plus a single unused one.
  bool value_symmetry = false;
  /// Try labels from k down to 1 instead of 1 up to k.
  bool descending_values = false;
  /// Edges whose sum condition is not imposed (e.g. edges to boundary pendants).
  std::vector<Edge> unchecked_edges;
};

/// Depth-first labeling search with incremental edge-constraint state.
///
/// Every checked edge uv is rewritten as sum_{A} f(l) != sum_{B} f(l) with
/// A = N(u)\N(v), B = N(v)\N(u); f is the unit vector of the label in sigma
/// mode and the label itself in lucky mode. Sigma edges between vertices of
/// different degree are dropped. A constraint with one free vertex forbids
/// at most one label of that vertex.
///
/// Labels at this interface are 1..k. One node is counted per label tried.
class LabelSearch {
 public:
  enum class Status { found, exhausted, budget };

  LabelSearch(const Graph& g, SearchConfig config);
  ~LabelSearch();
  LabelSearch(const LabelSearch&) = delete;
  LabelSearch& operator=(const LabelSearch&) = delete;

  /// Restricts v to the given labels before search. May be called repeatedly.
  void restrict(Vertex v, const std::vector<int>& labels);

  /// First solution in search order.
  Status find(std::uint64_t budget, std::vector<int>& labels);

  /// Visits every solution; the visitor returns false to stop early (reported as found).
  Status enumerate(std::uint64_t budget, const std::function<bool(const std::vector<int>&)>& visit);

  /// Branch and bound minimizing the number of vertices with label 1.
  /// `best` holds the optimum (or best so far on budget exhaustion), -1 if none.
  Status minimize_label_one(std::uint64_t budget, std::vector<int>& labels, int& best);

  std::uint64_t nodes() const noexcept;

 private:
  struct Impl;
  Impl* impl_;
};

/// Groups of mutually closed twins (N[u]=N[v]) and open twins (N(u)=N(v)),
/// each sorted by id; singleton classes are omitted.
struct TwinClasses {
  std::vector<std::vector<Vertex>> closed;
  std::vector<std::vector<Vertex>> open;
};
TwinClasses twin_classes(const Graph& g);

}  // namespace sigmaforge
