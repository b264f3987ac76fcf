#include "sigmaforge/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> roles)
    : adjacency_(static_cast<std::size_t>(vertex_count)), roles_(std::move(roles)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  if (roles_.empty()) roles_.resize(adjacency_.size());
  if (roles_.size() != adjacency_.size()) throw InputError("role table size does not match vertex count");

  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InputError("duplicate edge " + std::to_string(dup->first) + " " + std::to_string(dup->second));

  for (const auto& [u, v] : edges) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  edges_ = std::move(edges);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(vertex_count()) + ")");
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (const auto& list : adjacency_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

const std::string& Graph::role(Vertex v) const {
  check_vertex(v);
  return roles_[static_cast<std::size_t>(v)];
}

bool Graph::has_roles() const noexcept {
  return std::any_of(roles_.begin(), roles_.end(), [](const std::string& r) { return !r.empty(); });
}

Graph Graph::without_roles() const { return Graph(vertex_count(), edges_); }

Vertex GraphBuilder::add_vertex(std::string role) {
  roles_.push_back(std::move(role));
  degree_.push_back(0);
  return static_cast<Vertex>(roles_.size() - 1);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw InputError("builder edge endpoint out of range");
  edges_.emplace_back(u, v);
  ++degree_[static_cast<std::size_t>(u)];
  ++degree_[static_cast<std::size_t>(v)];
}

Vertex GraphBuilder::add_graph(const Graph& g, std::string_view role_prefix) {
  const Vertex offset = vertex_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::string role(role_prefix);
    if (!g.role(v).empty()) role += g.role(v);
    add_vertex(std::move(role));
  }
  for (const auto& [u, v] : g.edges()) add_edge(u + offset, v + offset);
  return offset;
}

void GraphBuilder::set_role(Vertex v, std::string role) {
  if (v < 0 || v >= vertex_count()) throw InputError("builder role vertex out of range");
  roles_[static_cast<std::size_t>(v)] = std::move(role);
}

int GraphBuilder::degree(Vertex v) const {
  if (v < 0 || v >= vertex_count()) throw InputError("builder degree vertex out of range");
  return degree_[static_cast<std::size_t>(v)];
}

Graph GraphBuilder::build() const { return Graph(vertex_count(), edges_, roles_); }

int degree(const Graph& g, Vertex v) { return g.degree(v); }

bool is_k_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

int regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int d = g.degree(0);
  return is_k_regular(g, d) ? d : -1;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

namespace {

// Splits on single spaces; any other whitespace layout is a format error.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= line.size()) {
    const auto pos = line.find(' ', start);
    const auto end = pos == std::string_view::npos ? line.size() : pos;
    out.push_back(line.substr(start, end - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(std::string_view field, std::size_t line_no, const char* what) {
  int value = 0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last)
    throw ParseError(line_no, std::string("expected integer for ") + what + ", got '" + std::string(field) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start < text.size()) {
      auto pos = text.find('\n', start);
      if (pos == std::string_view::npos) pos = text.size();
      auto line = text.substr(start, pos - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.push_back(line);
      start = pos + 1;
    }
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header line 'n m'");

  const auto header = split_fields(lines[0]);
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const int n = parse_int(header[0], 1, "vertex count");
  const int m = parse_int(header[1], 1, "edge count");
  if (n < 0 || m < 0) throw ParseError(1, "negative count in header");
  if (lines.size() < static_cast<std::size_t>(m) + 1)
    throw ParseError(lines.size() + 1, "expected " + std::to_string(m) + " edge lines");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    const std::size_t line_no = static_cast<std::size_t>(i) + 2;
    const auto fields = split_fields(lines[line_no - 1]);
    if (fields.size() != 2) throw ParseError(line_no, "edge line must be 'u v'");
    int u = parse_int(fields[0], line_no, "edge endpoint");
    int v = parse_int(fields[1], line_no, "edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    auto& list = seen[static_cast<std::size_t>(u)];
    if (std::find(list.begin(), list.end(), v) != list.end())
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    list.push_back(v);
    edges.emplace_back(u, v);
  }

  std::vector<std::string> roles(static_cast<std::size_t>(n));
  for (std::size_t idx = static_cast<std::size_t>(m) + 1; idx < lines.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const auto line = lines[idx];
    if (line.empty()) continue;
    constexpr std::string_view kRolePrefix = "# role ";
    if (line.rfind(kRolePrefix, 0) != 0) throw ParseError(line_no, "trailing line is not a role line");
    const auto rest = line.substr(kRolePrefix.size());
    const auto space = rest.find(' ');
    if (space == std::string_view::npos || space + 1 >= rest.size())
      throw ParseError(line_no, "role line must be '# role u tag'");
    const int v = parse_int(rest.substr(0, space), line_no, "role vertex");
    if (v < 0 || v >= n) throw ParseError(line_no, "role vertex out of range");
    roles[static_cast<std::size_t>(v)] = std::string(rest.substr(space + 1));
  }
  return Graph(n, std::move(edges), std::move(roles));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!g.role(v).empty()) out << "# role " << v << ' ' << g.role(v) << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open graph file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

namespace families {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

}  // namespace families

}  // namespace sigmaforge
