#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmaforge/gadgets.hpp"
#include "sigmaforge/graph.hpp"
#include "sigmaforge/labeling.hpp"
#include "sigmaforge/sat.hpp"

namespace sigmaforge {

/// Copy of a gadget inside a reduced graph.
struct GadgetPlacement {
  std::string name;
  Vertex offset = 0;
  int size = 0;
  std::vector<int> black_one_labels;
};

struct VariableTrace {
  int variable = 0;  ///< 1-based
  std::vector<Vertex> pos_ports;
  std::vector<Vertex> neg_ports;
  GadgetPlacement placement;
};

struct ClauseTrace {
  std::vector<Vertex> vertices;  ///< triangle, one per literal slot
  std::vector<Vertex> ports;     ///< the port (or literal vertex) each slot is joined to
};

struct Attachment {
  Vertex host = 0;
  GadgetPlacement placement;
};

struct ReductionOutput {
  std::string kind;
  Graph graph;
  Formula formula;
  std::vector<VariableTrace> variables;
  std::vector<ClauseTrace> clauses;
  std::vector<Attachment> completions;
  std::vector<int> weights;  ///< per g.edges() entry; maxcut only
  nlohmann::json params = nlohmann::json::object();
};

nlohmann::json trace_json(const ReductionOutput& r);

// NAE-3SAT to 3-regular 2-labeling.

ReductionOutput build_nae_reduction(const Formula& f);
/// Throws InputError unless `a` is NAE-satisfying.
Labeling nae_coloring_from_assignment(const ReductionOutput& r, const Assignment& a);
/// Reads each variable's first positive port: label 1 means true.
/// Throws InputError unless `lab` is a valid lucky 2-labeling.
Assignment nae_assignment_from_coloring(const ReductionOutput& r, const Labeling& lab);

// Regular k-colorability to sigma number k.

struct SigmaKLayout {
  int n = 0;
  int k = 0;
  int block() const { return k * k - k + 1; }
  /// alpha in 0..n-1; beta in 1..k; gamma in 1..k-1 (1..k when beta = k)
  Vertex y(int alpha, int beta, int gamma) const;
  Vertex v(int beta) const { return n * block() + beta - 1; }
  Vertex x(int alpha) const { return n * block() + (k - 1) + alpha; }
  Vertex z(int alpha) const { return n * block() + (k - 1) + n + alpha; }
  int vertex_count() const { return n * block() + (k - 1) + 2 * n; }
};

ReductionOutput build_sigma_k_reduction(const Graph& g_star, int k);
SigmaKLayout sigma_k_layout(const ReductionOutput& r);
/// `c_prime` holds colors 1..k per vertex of g_star.
VertexSetPartition sigma_k_coloring_from_proper_coloring(const ReductionOutput& r, const std::vector<int>& c_prime);
/// Colors x_alpha by the part of z_alpha.
std::vector<int> proper_coloring_from_sigma_k(const ReductionOutput& r, const VertexSetPartition& part);

// Cubic monotone 1-in-3 SAT to minimum part size.

/// Returns none when the NAE gate finds no NAE assignment (unless skipped).
std::optional<ReductionOutput> build_1in3_reduction(const Formula& f, bool skip_nae_gate = false);
/// min over |T| in [ceil(m/3), m - ceil(m/3)] of (t+3)|T| + f(m-|T|).
long long theta_threshold(int m, int t_beta, int f_beta);
long long theta_threshold(const ReductionOutput& r);
/// Labeling where label 1 marks true variables; for 1-in-3 assignments
/// its label-1 part has exactly (t+3)|T| + f|F| vertices.
Labeling one_in_three_coloring_from_assignment(const ReductionOutput& r, const Assignment& a);

// NAE-3SAT to MaxCut.

/// Single-occurrence variables give a 2-cycle, kept as one edge of weight 2.
ReductionOutput build_maxcut_reduction(const Formula& f);
long long maxcut_threshold(const ReductionOutput& r);

// Complete graph on C(k+2,2) vertices with k leaves per clique vertex.

Graph build_remark2_graph(int k);
VertexSetPartition remark2_coloring(int k);

}  // namespace sigmaforge
