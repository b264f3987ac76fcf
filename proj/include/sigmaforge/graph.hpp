#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigmaforge {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph with dense 0-based vertex ids.
///
/// Edges are stored canonically (u < v, sorted). Each vertex may carry a
/// free-form role tag such as "var:x3:pos:2"; roles never influence any
/// adjacency-dependent computation.
class Graph {
 public:
  Graph() = default;

  /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
  Graph(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> roles = {});

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const noexcept;

  const std::string& role(Vertex v) const;
  const std::vector<std::string>& roles() const noexcept { return roles_; }
  bool has_roles() const noexcept;
  Graph without_roles() const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> roles_;
};

/// Incremental construction helper used by gadget and reduction builders.
/// Vertex ids are handed out in call order, which keeps outputs reproducible.
class GraphBuilder {
 public:
  Vertex add_vertex(std::string role = {});
  void add_edge(Vertex u, Vertex v);
  /// Copies `g` into the builder with ids shifted; returns the offset used.
  Vertex add_graph(const Graph& g, std::string_view role_prefix = {});
  void set_role(Vertex v, std::string role);
  int vertex_count() const noexcept { return static_cast<int>(roles_.size()); }
  int degree(Vertex v) const;
  Graph build() const;

 private:
  std::vector<std::string> roles_;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
};

int degree(const Graph& g, Vertex v);
bool is_k_regular(const Graph& g, int k);
/// Returns the common degree if `g` is regular, -1 otherwise. Empty graph is 0-regular.
int regular_degree(const Graph& g);
bool is_connected(const Graph& g);

/// Text format: "n m" header, m lines "u v", optional trailing "# role u tag" lines.
Graph parse_graph(std::string_view text);
/// Canonical output: LF endings, single spaces, edges sorted with u < v.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

/// Standard families used throughout tests and examples.
namespace families {
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph star(int leaves);
Graph petersen();
}  // namespace families

}  // namespace sigmaforge
