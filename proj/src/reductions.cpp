#include "sigmaforge/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

nlohmann::json trace_json(const ReductionOutput& r) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : r.variables)
    vars.push_back({{"variable", v.variable},
                    {"pos_ports", v.pos_ports},
                    {"neg_ports", v.neg_ports},
                    {"gadget", v.placement.name},
                    {"offset", v.placement.offset},
                    {"size", v.placement.size}});
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& c : r.clauses) clauses.push_back({{"vertices", c.vertices}, {"ports", c.ports}});
  nlohmann::json completions = nlohmann::json::array();
  for (const auto& a : r.completions) completions.push_back({{"host", a.host}, {"offset", a.placement.offset}});
  nlohmann::json j = {{"kind", r.kind},
                      {"vertex_count", r.graph.vertex_count()},
                      {"edge_count", r.graph.edge_count()},
                      {"params", r.params},
                      {"variables", vars},
                      {"clauses", clauses},
                      {"completions", completions}};
  if (!r.weights.empty()) j["weights"] = r.weights;
  return j;
}

namespace {

GadgetPlacement place(GraphBuilder& b, const Gadget& g, const std::string& prefix) {
  GadgetPlacement p;
  p.name = g.name;
  p.offset = b.add_graph(g.graph, prefix);
  p.size = g.graph.vertex_count();
  p.black_one_labels = g.black_one_labels;
  return p;
}

void write_placement(std::vector<std::int64_t>& labels, const GadgetPlacement& p, int black_label) {
  for (int i = 0; i < p.size; ++i) {
    const int l = p.black_one_labels[static_cast<std::size_t>(i)];
    labels[static_cast<std::size_t>(p.offset + i)] = black_label == 1 ? l : 3 - l;
  }
}

std::int64_t nb_sum(const Graph& g, const std::vector<std::int64_t>& labels, Vertex v) {
  std::int64_t s = 0;
  for (Vertex w : g.neighbors(v)) s += labels[static_cast<std::size_t>(w)];
  return s;
}

bool edges_ok_around(const Graph& g, const std::vector<std::int64_t>& labels, const std::vector<Vertex>& touched) {
  for (Vertex u : touched)
    for (Vertex w : g.neighbors(u))
      if (nb_sum(g, labels, u) == nb_sum(g, labels, w)) return false;
  return true;
}

// Picks the first of the eight triangle labelings that keeps every edge near
// the triangle valid.
void label_triangles(const Graph& g, std::vector<std::int64_t>& labels, const std::vector<ClauseTrace>& clauses) {
  for (const auto& c : clauses) {
    std::vector<Vertex> touched = c.vertices;
    touched.insert(touched.end(), c.ports.begin(), c.ports.end());
    bool done = false;
    for (int mask = 0; mask < 8 && !done; ++mask) {
      for (int s = 0; s < 3; ++s) labels[static_cast<std::size_t>(c.vertices[static_cast<std::size_t>(s)])] = 1 + ((mask >> s) & 1);
      done = edges_ok_around(g, labels, touched);
    }
    if (!done) throw ConstructionError("no valid labeling of a clause triangle");
  }
}

void require_three_regular(const Graph& g, const char* what) {
  if (!is_k_regular(g, 3)) throw ConstructionError(std::string(what) + " output is not 3-regular");
}

struct Occurrences {
  std::vector<std::vector<std::pair<int, int>>> pos, neg, any;  // (clause, slot) per variable
};

Occurrences occurrences(const Formula& f) {
  Occurrences o;
  const auto n = static_cast<std::size_t>(f.num_vars);
  o.pos.resize(n);
  o.neg.resize(n);
  o.any.resize(n);
  for (std::size_t j = 0; j < f.clauses.size(); ++j)
    for (int s = 0; s < 3; ++s) {
      const Literal lit = f.clauses[j][static_cast<std::size_t>(s)];
      const auto x = static_cast<std::size_t>(std::abs(lit) - 1);
      (lit > 0 ? o.pos : o.neg)[x].emplace_back(static_cast<int>(j), s);
      o.any[x].emplace_back(static_cast<int>(j), s);
    }
  return o;
}

const GadgetCertificate& certified_or_throw(const Gadget& g) {
  static std::mutex mu;
  static std::map<std::string, GadgetCertificate> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.name);
  if (it == cache.end()) {
    auto cert = certify(g.graph, g.contract);
    if (!cert.certified()) throw ConstructionError("gadget '" + g.name + "' failed certification");
    it = cache.emplace(g.name, std::move(cert)).first;
  }
  return it->second;
}

std::vector<std::int64_t> blank_labels(const Graph& g) { return std::vector<std::int64_t>(static_cast<std::size_t>(g.vertex_count()), 0); }

}  // namespace

ReductionOutput build_nae_reduction(const Formula& f) {
  validate(f);
  const auto occ = occurrences(f);
  ReductionOutput r;
  r.kind = "nae3sat";
  r.formula = f;
  GraphBuilder b;

  std::vector<std::size_t> next_pos(static_cast<std::size_t>(f.num_vars), 0), next_neg(next_pos);
  for (int x = 1; x <= f.num_vars; ++x) {
    const auto xi = static_cast<std::size_t>(x - 1);
    const VariableGadget vg = variable_gadget(static_cast<int>(occ.pos[xi].size()), static_cast<int>(occ.neg[xi].size()));
    certified_or_throw(vg.gadget);
    VariableTrace t;
    t.variable = x;
    t.placement = place(b, vg.gadget, "var:x" + std::to_string(x) + ":");
    for (Vertex p : vg.pos_ports) t.pos_ports.push_back(t.placement.offset + p);
    for (Vertex p : vg.neg_ports) t.neg_ports.push_back(t.placement.offset + p);
    r.variables.push_back(std::move(t));
  }

  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    ClauseTrace c;
    for (int s = 0; s < 3; ++s)
      c.vertices.push_back(b.add_vertex("clause:c" + std::to_string(j + 1) + ":v" + std::to_string(s + 1)));
    b.add_edge(c.vertices[0], c.vertices[1]);
    b.add_edge(c.vertices[1], c.vertices[2]);
    b.add_edge(c.vertices[0], c.vertices[2]);
    for (int s = 0; s < 3; ++s) {
      const Literal lit = f.clauses[j][static_cast<std::size_t>(s)];
      const auto xi = static_cast<std::size_t>(std::abs(lit) - 1);
      const auto& var = r.variables[xi];
      const Vertex port = lit > 0 ? var.pos_ports[next_pos[xi]++] : var.neg_ports[next_neg[xi]++];
      b.add_edge(c.vertices[static_cast<std::size_t>(s)], port);
      c.ports.push_back(port);
    }
    r.clauses.push_back(std::move(c));
  }

  const Gadget t = t_gadget();
  certified_or_throw(t);
  for (int pass = 0; pass < 2; ++pass) {
    const int scan = b.vertex_count();
    for (Vertex v = 0; v < scan; ++v)
      while (b.degree(v) < 3) {
        Attachment a;
        a.host = v;
        a.placement = place(b, t, "t" + std::to_string(r.completions.size()) + ":");
        b.add_edge(v, a.placement.offset);
        r.completions.push_back(std::move(a));
      }
  }
  r.graph = b.build();
  require_three_regular(r.graph, "nae3sat");
  r.params = {{"num_vars", f.num_vars}, {"num_clauses", f.clauses.size()}, {"completions", r.completions.size()}};
  return r;
}

Labeling nae_coloring_from_assignment(const ReductionOutput& r, const Assignment& a) {
  if (!nae_holds(r.formula, a)) throw InputError("assignment is not NAE-satisfying");
  auto labels = blank_labels(r.graph);
  for (const auto& v : r.variables)
    write_placement(labels, v.placement, a.value_of[static_cast<std::size_t>(v.variable - 1)] ? 1 : 2);
  for (const auto& t : r.completions) {
    const auto host = labels[static_cast<std::size_t>(t.host)];
    if (host == 0) throw ConstructionError("completion host labeled after its gadget");
    write_placement(labels, t.placement, 3 - static_cast<int>(host));
  }
  label_triangles(r.graph, labels, r.clauses);
  Labeling lab{2, labels};
  if (!is_lucky_labeling(r.graph, lab)) throw ConstructionError("constructed labeling is not lucky");
  return lab;
}

Assignment nae_assignment_from_coloring(const ReductionOutput& r, const Labeling& lab) {
  if (static_cast<int>(lab.label_of.size()) != r.graph.vertex_count()) throw InputError("labeling size mismatch");
  for (auto l : lab.label_of)
    if (l != 1 && l != 2) throw InputError("labeling must use labels 1 and 2 only");
  if (!is_lucky_labeling(r.graph, lab)) throw InputError("labeling is not a lucky labeling");
  Assignment a;
  for (const auto& v : r.variables)
    a.value_of.push_back(lab.label_of[static_cast<std::size_t>(v.pos_ports.front())] == 1);
  return a;
}

Vertex SigmaKLayout::y(int alpha, int beta, int gamma) const {
  if (alpha < 0 || alpha >= n || beta < 1 || beta > k || gamma < 1 || gamma > (beta == k ? k : k - 1))
    throw InputError("clique index out of range");
  const int base = alpha * block();
  if (beta < k) return base + (beta - 1) * (k - 1) + (gamma - 1);
  return base + (k - 1) * (k - 1) + (gamma - 1);
}

ReductionOutput build_sigma_k_reduction(const Graph& g_star, int k) {
  if (k < 2) throw InputError("k must be at least 2");
  if (regular_degree(g_star) < 0) throw InputError("g_star must be regular");
  const SigmaKLayout L{g_star.vertex_count(), k};
  std::vector<std::string> roles(static_cast<std::size_t>(L.vertex_count()));
  std::vector<Edge> edges;
  for (int a = 0; a < L.n; ++a) {
    std::vector<Vertex> clique;
    for (int beta = 1; beta <= k; ++beta)
      for (int gamma = 1; gamma <= (beta == k ? k : k - 1); ++gamma) {
        const Vertex y = L.y(a, beta, gamma);
        roles[static_cast<std::size_t>(y)] =
            "y:" + std::to_string(a + 1) + ":" + std::to_string(beta) + ":" + std::to_string(gamma);
        clique.push_back(y);
        edges.emplace_back(y, beta < k ? L.v(beta) : L.x(a));
      }
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    roles[static_cast<std::size_t>(L.x(a))] = "x:" + std::to_string(a + 1);
    roles[static_cast<std::size_t>(L.z(a))] = "z:" + std::to_string(a + 1);
    edges.emplace_back(L.x(a), L.z(a));
  }
  for (int beta = 1; beta < k; ++beta) roles[static_cast<std::size_t>(L.v(beta))] = "v:" + std::to_string(beta);
  for (const auto& [u, w] : g_star.edges()) edges.emplace_back(L.x(u), L.x(w));

  ReductionOutput r;
  r.kind = "sigmak";
  r.graph = Graph(L.vertex_count(), std::move(edges), std::move(roles));
  if (r.graph.vertex_count() != L.n * (k * k - k + 1) + (k - 1) + 2 * L.n)
    throw ConstructionError("sigmak vertex count mismatch");
  r.params = {{"n", L.n}, {"k", k}, {"g_star_degree", regular_degree(g_star)}};
  return r;
}

SigmaKLayout sigma_k_layout(const ReductionOutput& r) {
  if (r.kind != "sigmak") throw InputError("not a sigmak reduction");
  return {r.params.at("n").get<int>(), r.params.at("k").get<int>()};
}

VertexSetPartition sigma_k_coloring_from_proper_coloring(const ReductionOutput& r, const std::vector<int>& c_prime) {
  const auto L = sigma_k_layout(r);
  std::vector<Edge> star_edges;
  for (const auto& [u, w] : r.graph.edges())
    if (u >= L.x(0) && u < L.x(0) + L.n && w >= L.x(0) && w < L.x(0) + L.n)
      star_edges.emplace_back(u - L.x(0), w - L.x(0));
  if (!is_proper_coloring(Graph(L.n, star_edges), c_prime, L.k)) throw InputError("c_prime is not a proper k-coloring");

  std::vector<int> part(static_cast<std::size_t>(L.vertex_count()), 0);
  for (int beta = 1; beta < L.k; ++beta) part[static_cast<std::size_t>(L.v(beta))] = beta;
  for (int a = 0; a < L.n; ++a) {
    part[static_cast<std::size_t>(L.x(a))] = L.k;
    part[static_cast<std::size_t>(L.z(a))] = c_prime[static_cast<std::size_t>(a)];
    for (int gamma = 1; gamma <= L.k; ++gamma) part[static_cast<std::size_t>(L.y(a, L.k, gamma))] = gamma;
    for (int beta = 1; beta < L.k; ++beta) {
      int gamma = 1;
      for (int label = 1; label <= L.k; ++label)
        if (label != beta) part[static_cast<std::size_t>(L.y(a, beta, gamma++))] = label;
    }
  }
  VertexSetPartition out(L.k, std::move(part));
  if (!is_sigma_coloring(r.graph, out))
    throw ConstructionError("constructed partition is not a sigma coloring (g_star degree " +
                            r.params.at("g_star_degree").dump() + ", k " + std::to_string(L.k) + ")");
  return out;
}

std::vector<int> proper_coloring_from_sigma_k(const ReductionOutput& r, const VertexSetPartition& part) {
  const auto L = sigma_k_layout(r);
  if (part.size() != r.graph.vertex_count()) throw InputError("partition size mismatch");
  std::vector<int> colors;
  for (int a = 0; a < L.n; ++a) colors.push_back(part.part(L.z(a)));
  return colors;
}

std::optional<ReductionOutput> build_1in3_reduction(const Formula& f, bool skip_nae_gate) {
  if (f.flavor != Flavor::one_in_three) throw InputError("1-in-3 reduction needs a 1in3-flavored formula");
  validate(f);
  if (!skip_nae_gate && !nae_satisfiable(f)) return std::nullopt;

  const ThreePortGadget ax = three_port_gadget();
  const auto& cert = certified_or_throw(ax.gadget);
  if (cert.black_one.black_class_min != cert.black_one.black_class_max ||
      cert.black_two.black_class_min != cert.black_two.black_class_max ||
      cert.black_one.black_class_min != cert.black_two.black_class_min)
    throw ConstructionError("three-port gadget class sizes are not fixed");
  const int size = ax.gadget.graph.vertex_count();
  const int t_beta = cert.black_one.black_class_min;
  const int f_beta = size - t_beta;

  const auto occ = occurrences(f);
  ReductionOutput r;
  r.kind = "cubic1in3";
  r.formula = f;
  GraphBuilder b;
  for (int x = 1; x <= f.num_vars; ++x) {
    VariableTrace t;
    t.variable = x;
    t.placement = place(b, ax.gadget, "var:x" + std::to_string(x) + ":");
    for (Vertex p : ax.ports) t.pos_ports.push_back(t.placement.offset + p);
    r.variables.push_back(std::move(t));
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(f.num_vars), 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    ClauseTrace c;
    for (int s = 0; s < 3; ++s)
      c.vertices.push_back(b.add_vertex("clause:c" + std::to_string(j + 1) + ":v" + std::to_string(s + 1)));
    b.add_edge(c.vertices[0], c.vertices[1]);
    b.add_edge(c.vertices[1], c.vertices[2]);
    b.add_edge(c.vertices[0], c.vertices[2]);
    for (int s = 0; s < 3; ++s) {
      const auto xi = static_cast<std::size_t>(f.clauses[j][static_cast<std::size_t>(s)] - 1);
      const Vertex port = r.variables[xi].pos_ports[next[xi]++];
      b.add_edge(c.vertices[static_cast<std::size_t>(s)], port);
      c.ports.push_back(port);
    }
    r.clauses.push_back(std::move(c));
  }
  r.graph = b.build();
  require_three_regular(r.graph, "cubic1in3");
  r.params = {{"m", f.num_vars},
              {"clauses", f.clauses.size()},
              {"t_beta", t_beta},
              {"f_beta", f_beta},
              {"gadget_size", size},
              {"nae_gate", skip_nae_gate ? "skipped" : "passed"}};
  return r;
}

long long theta_threshold(int m, int t_beta, int f_beta) {
  if (m < 1) throw InputError("theta threshold needs m >= 1");
  const int low = (m + 2) / 3;
  const int high = std::max(low, m - low);
  long long best = -1;
  for (int t = low; t <= high; ++t) {
    const long long value = static_cast<long long>(t_beta + 3) * t + static_cast<long long>(f_beta) * (m - t);
    if (best < 0 || value < best) best = value;
  }
  return best;
}

long long theta_threshold(const ReductionOutput& r) {
  if (r.kind != "cubic1in3") throw InputError("not a cubic1in3 reduction");
  return theta_threshold(r.params.at("m").get<int>(), r.params.at("t_beta").get<int>(),
                         r.params.at("f_beta").get<int>());
}

Labeling one_in_three_coloring_from_assignment(const ReductionOutput& r, const Assignment& a) {
  if (r.kind != "cubic1in3") throw InputError("not a cubic1in3 reduction");
  if (!nae_holds(r.formula, a)) throw InputError("assignment is not NAE-satisfying");
  auto labels = blank_labels(r.graph);
  for (const auto& v : r.variables)
    write_placement(labels, v.placement, a.value_of[static_cast<std::size_t>(v.variable - 1)] ? 1 : 2);
  label_triangles(r.graph, labels, r.clauses);
  Labeling lab{2, labels};
  if (!is_lucky_labeling(r.graph, lab)) throw ConstructionError("constructed labeling is not valid");
  return lab;
}

ReductionOutput build_maxcut_reduction(const Formula& f) {
  validate(f);
  const auto occ = occurrences(f);
  ReductionOutput r;
  r.kind = "maxcut";
  r.formula = f;
  GraphBuilder b;
  std::vector<Edge> heavy;
  // literal vertices: pos[i], neg[i] per occurrence i of each variable
  std::vector<std::vector<Vertex>> pos(static_cast<std::size_t>(f.num_vars)), neg(pos);
  for (int x = 1; x <= f.num_vars; ++x) {
    const auto xi = static_cast<std::size_t>(x - 1);
    const auto count = occ.any[xi].size();
    if (count == 0) continue;
    VariableTrace t;
    t.variable = x;
    std::vector<Vertex> cycle;
    for (std::size_t i = 0; i < count; ++i) {
      pos[xi].push_back(b.add_vertex("lit:x" + std::to_string(x) + ":pos:" + std::to_string(i + 1)));
      neg[xi].push_back(b.add_vertex("lit:x" + std::to_string(x) + ":neg:" + std::to_string(i + 1)));
      cycle.push_back(pos[xi].back());
      cycle.push_back(neg[xi].back());
    }
    if (count == 1) {
      b.add_edge(cycle[0], cycle[1]);
      heavy.emplace_back(cycle[0], cycle[1]);
    } else {
      for (std::size_t i = 0; i < cycle.size(); ++i) b.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    t.pos_ports = pos[xi];
    t.neg_ports = neg[xi];
    r.variables.push_back(std::move(t));
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(f.num_vars), 0);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    ClauseTrace c;
    for (int s = 0; s < 3; ++s)
      c.vertices.push_back(b.add_vertex("clause:c" + std::to_string(j + 1) + ":v" + std::to_string(s + 1)));
    b.add_edge(c.vertices[0], c.vertices[1]);
    b.add_edge(c.vertices[1], c.vertices[2]);
    b.add_edge(c.vertices[0], c.vertices[2]);
    for (int s = 0; s < 3; ++s) {
      const Literal lit = f.clauses[j][static_cast<std::size_t>(s)];
      const auto xi = static_cast<std::size_t>(std::abs(lit) - 1);
      const std::size_t i = next[xi]++;
      const Vertex target = lit > 0 ? neg[xi][i] : pos[xi][i];
      b.add_edge(c.vertices[static_cast<std::size_t>(s)], target);
      c.ports.push_back(target);
    }
    r.clauses.push_back(std::move(c));
  }
  r.graph = b.build();
  for (const auto& e : r.graph.edges())
    r.weights.push_back(std::find(heavy.begin(), heavy.end(), e) != heavy.end() ? 2 : 1);
  const long long k = static_cast<long long>(f.clauses.size());
  if (r.graph.vertex_count() != 9 * k) throw ConstructionError("maxcut vertex count differs from 9k");
  r.params = {{"clauses", k}, {"threshold", 11 * k}, {"weighted_edges", heavy.size()}};
  return r;
}

long long maxcut_threshold(const ReductionOutput& r) {
  if (r.kind != "maxcut") throw InputError("not a maxcut reduction");
  return r.params.at("threshold").get<long long>();
}

namespace {

std::vector<std::array<int, 3>> roots(int k) {
  std::vector<std::array<int, 3>> out;
  for (int a = k; a >= 0; --a)
    for (int b = k - a; b >= 0; --b) out.push_back({a, b, k - a - b});
  return out;
}

}  // namespace

Graph build_remark2_graph(int k) {
  if (k < 1) throw InputError("remark2 graph needs k >= 1");
  const int n = (k + 2) * (k + 1) / 2;
  std::vector<Edge> edges;
  std::vector<std::string> roles;
  for (int i = 0; i < n; ++i) roles.push_back("clique:" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      const Vertex leaf = static_cast<Vertex>(roles.size());
      roles.push_back("leaf:" + std::to_string(i) + ":" + std::to_string(j));
      edges.emplace_back(i, leaf);
    }
  const int total = static_cast<int>(roles.size());
  return Graph(total, std::move(edges), std::move(roles));
}

VertexSetPartition remark2_coloring(int k) {
  if (k < 1) throw InputError("remark2 coloring needs k >= 1");
  const auto rs = roots(k);
  const int n = static_cast<int>(rs.size());
  std::vector<int> part(static_cast<std::size_t>(n), 1);
  for (const auto& root : rs)
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < root[static_cast<std::size_t>(c)]; ++i) part.push_back(c + 1);
  return VertexSetPartition(3, std::move(part));
}

}  // namespace sigmaforge
