#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sigmaforge/graph.hpp"
#include "sigmaforge/search.hpp"

namespace sigmaforge {

/// A gadget vertex, or the boundary pendant hung on a port.
struct Terminal {
  bool pendant = false;
  int index = 0;  ///< vertex id, or port index when pendant

  static Terminal vertex(Vertex v) { return {false, v}; }
  static Terminal pendant_of(int port) { return {true, port}; }
  bool operator==(const Terminal&) const = default;
};

struct PortSpec {
  std::string name;
  Vertex vertex = 0;
  int degree = 2;  ///< required internal degree
  bool operator==(const PortSpec&) const = default;
};

/// Black terminals share one label, white terminals share the other.
/// Boundary model: every port gets one pendant whose label ranges over {1,2};
/// the pendant edge itself is not checked.
struct ForcingContract {
  std::string name;
  Mode mode = Mode::lucky;
  std::vector<PortSpec> ports;
  std::vector<Terminal> black;
  std::vector<Terminal> white;
  int host_degree = 3;  ///< required degree of non-port vertices; 0 = any

  bool operator==(const ForcingContract&) const = default;
};

struct PolarityStats {
  std::uint64_t labelings = 0;  ///< conforming labelings with this black label
  int black_class_min = -1;     ///< gadget vertices sharing the black label
  int black_class_max = -1;
  bool operator==(const PolarityStats&) const = default;
};

struct GadgetCertificate {
  std::string contract_error;  ///< non-empty when the contract itself is inconsistent
  std::uint64_t contexts = 0;
  std::uint64_t contexts_realized = 0;
  std::uint64_t valid_labelings = 0;
  std::uint64_t nodes = 0;
  bool degrees_ok = false;
  bool vacuous = false;
  bool all_conforming = false;
  bool both_polarities_realizable = false;
  std::optional<std::vector<int>> counterexample;  ///< gadget labels then pendant labels
  PolarityStats black_one;
  PolarityStats black_two;

  bool certified() const { return contract_error.empty() && degrees_ok && all_conforming && both_polarities_realizable; }
  bool operator==(const GadgetCertificate&) const = default;
};

inline constexpr int kMaxCertifyVertices = 64;
inline constexpr std::uint64_t kCertifyBudget = 50'000'000;

/// Complete enumeration of valid 2-labelings of gadget plus pendants.
/// Throws BudgetError when the enumeration cannot finish.
GadgetCertificate certify(const Graph& gadget, const ForcingContract& contract,
                          std::uint64_t budget = kCertifyBudget);

/// Searches labeled fragments whose ports are vertices 0..P-1 with the
/// contract's degrees and whose other vertices have host_degree. Port 0's
/// neighbors are the first non-port vertices. Exhaustive in canonical edge
/// order up to 14 vertices, seeded random pairings above that.
/// `budget` bounds the number of candidates certified.
std::optional<Graph> synthesize(const ForcingContract& contract, int max_vertices, std::uint64_t budget);

nlohmann::json to_json(const ForcingContract& c);
ForcingContract contract_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GadgetCertificate& c);

/// A gadget together with its contract and one valid internal labeling per polarity.
struct Gadget {
  std::string name;
  Graph graph;
  ForcingContract contract;
  /// Labels of gadget vertices when the black terminals carry label 1.
  /// The label-2 polarity is the complement.
  std::vector<int> black_one_labels;

  std::vector<int> labels_for(int black_label) const;
};

/// K4 minus an edge; ports are the two degree-2 endpoints.
/// Black = endpoints, white = their pendants.
Gadget diamond_gadget();

/// Degree-completion gadget: port t of internal degree 2, forced opposite to
/// its two neighbors, which are forced equal.
Gadget t_gadget();

/// Ring of per-occurrence ports separated by diamonds. Positive ports are
/// black, negative ports white. Both counts are raised to at least 1.
struct VariableGadget {
  Gadget gadget;
  std::vector<Vertex> pos_ports;
  std::vector<Vertex> neg_ports;
};
VariableGadget variable_gadget(int num_ports_true, int num_ports_false);

/// Seven-vertex decoration hung on a ring vertex; port 0.
Gadget prism_decoration();

/// Three-port gadget for the minimum-part reduction: a four-diamond ring
/// carrying ports p1,p2,p3 and a decorated ring vertex.
struct ThreePortGadget {
  Gadget gadget;
  std::vector<Vertex> ports;
};
ThreePortGadget three_port_gadget();

}  // namespace sigmaforge
