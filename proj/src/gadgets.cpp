#include "sigmaforge/gadgets.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

namespace {

std::string check_contract(const Graph& g, const ForcingContract& c) {
  const int n = g.vertex_count();
  const int p = static_cast<int>(c.ports.size());
  std::set<Vertex> port_vertices;
  for (const auto& port : c.ports) {
    if (port.vertex < 0 || port.vertex >= n) return "port '" + port.name + "' is not a gadget vertex";
    if (!port_vertices.insert(port.vertex).second) return "vertex " + std::to_string(port.vertex) + " is two ports";
  }
  auto valid = [&](const Terminal& t) { return t.pendant ? (t.index >= 0 && t.index < p) : (t.index >= 0 && t.index < n); };
  for (const auto* side : {&c.black, &c.white})
    for (const auto& t : *side)
      if (!valid(t)) return "terminal out of range";
  for (const auto& b : c.black)
    if (std::find(c.white.begin(), c.white.end(), b) != c.white.end())
      return std::string(b.pendant ? "pendant of port " : "vertex ") + std::to_string(b.index) + " is both black and white";
  if (c.black.empty() && c.white.empty()) return "contract names no terminals";
  for (const auto& port : c.ports) {
    const Terminal t = Terminal::vertex(port.vertex);
    if (std::find(c.black.begin(), c.black.end(), t) == c.black.end() &&
        std::find(c.white.begin(), c.white.end(), t) == c.white.end())
      return "port '" + port.name + "' is neither black nor white";
  }
  return {};
}

bool degrees_match(const Graph& g, const ForcingContract& c) {
  std::vector<int> want(static_cast<std::size_t>(g.vertex_count()), c.host_degree);
  for (const auto& port : c.ports) want[static_cast<std::size_t>(port.vertex)] = port.degree;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int w = want[static_cast<std::size_t>(v)];
    if (w > 0 && g.degree(v) != w) return false;
  }
  return true;
}

void note(PolarityStats& s, int size) {
  ++s.labelings;
  if (s.black_class_min < 0 || size < s.black_class_min) s.black_class_min = size;
  if (size > s.black_class_max) s.black_class_max = size;
}

}  // namespace

GadgetCertificate certify(const Graph& gadget, const ForcingContract& contract, std::uint64_t budget) {
  GadgetCertificate cert;
  cert.contract_error = check_contract(gadget, contract);
  if (!cert.contract_error.empty()) return cert;
  cert.degrees_ok = degrees_match(gadget, contract);

  const int n = gadget.vertex_count();
  const int p = static_cast<int>(contract.ports.size());
  if (n + p > kMaxCertifyVertices)
    throw BudgetError("gadget with pendants exceeds " + std::to_string(kMaxCertifyVertices) + " vertices");
  if (p > 20) throw BudgetError("too many ports to track boundary contexts");

  GraphBuilder builder;
  builder.add_graph(gadget.without_roles());
  SearchConfig cfg;
  cfg.mode = contract.mode;
  cfg.k = 2;
  for (const auto& port : contract.ports) {
    const Vertex pendant = builder.add_vertex();
    builder.add_edge(port.vertex, pendant);
    cfg.unchecked_edges.emplace_back(port.vertex, pendant);
  }
  const Graph host = builder.build();
  cert.contexts = std::uint64_t{1} << p;

  auto label_of = [&](const std::vector<int>& labels, const Terminal& t) {
    return labels[static_cast<std::size_t>(t.pendant ? n + t.index : t.index)];
  };
  auto uniform = [&](const std::vector<int>& labels, const std::vector<Terminal>& side) {
    for (const auto& t : side)
      if (label_of(labels, t) != label_of(labels, side.front())) return false;
    return true;
  };

  std::vector<char> seen_context(static_cast<std::size_t>(cert.contexts), 0);
  bool violated = false;
  LabelSearch search(host, cfg);
  const auto status = search.enumerate(budget, [&](const std::vector<int>& labels) {
    ++cert.valid_labelings;
    std::uint64_t context = 0;
    for (int i = 0; i < p; ++i)
      if (labels[static_cast<std::size_t>(n + i)] == 2) context |= std::uint64_t{1} << i;
    seen_context[static_cast<std::size_t>(context)] = 1;

    const bool ok_black = contract.black.empty() || uniform(labels, contract.black);
    const bool ok_white = contract.white.empty() || uniform(labels, contract.white);
    bool ok = ok_black && ok_white;
    int black_label = 0;
    if (ok) {
      black_label = !contract.black.empty() ? label_of(labels, contract.black.front())
                                            : 3 - label_of(labels, contract.white.front());
      if (!contract.white.empty() && label_of(labels, contract.white.front()) == black_label) ok = false;
    }
    if (!ok) {
      violated = true;
      if (!cert.counterexample) cert.counterexample = labels;
      return true;
    }
    const int size = static_cast<int>(std::count(labels.begin(), labels.begin() + n, black_label));
    note(black_label == 1 ? cert.black_one : cert.black_two, size);
    return true;
  });
  cert.nodes = search.nodes();
  if (status == LabelSearch::Status::budget) throw BudgetError("certification ran out of node budget");

  cert.contexts_realized = static_cast<std::uint64_t>(std::count(seen_context.begin(), seen_context.end(), 1));
  cert.vacuous = cert.valid_labelings == 0;
  cert.all_conforming = !cert.vacuous && !violated;
  cert.both_polarities_realizable = cert.black_one.labelings > 0 && cert.black_two.labelings > 0;
  return cert;
}

namespace {

// Enumerates simple graphs with the given degree sequence, vertex by vertex in
// id order, choosing each vertex's remaining neighbors among larger ids in
// lexicographic order. `fixed` edges are placed up front.
class DegreeEnumerator {
 public:
  DegreeEnumerator(std::vector<int> degree, std::vector<Edge> fixed, std::vector<char> closed_rows)
      : n_(static_cast<int>(degree.size())), need_(std::move(degree)), closed_(std::move(closed_rows)) {
    adj_.assign(static_cast<std::size_t>(n_), std::vector<char>(static_cast<std::size_t>(n_), 0));
    for (auto [u, v] : fixed) {
      adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
      --need_[static_cast<std::size_t>(u)];
      --need_[static_cast<std::size_t>(v)];
      edges_.emplace_back(u, v);
    }
  }

  // Visitor returns false to stop. Returns false if stopped or step limit hit.
  template <class Visit>
  bool run(Visit&& visit, std::uint64_t step_limit) {
    steps_ = 0;
    limit_ = step_limit;
    for (int x : need_)
      if (x < 0) return true;
    return row(0, visit);
  }

 private:
  template <class Visit>
  bool row(int u, Visit& visit) {
    if (++steps_ > limit_) return false;
    if (u == n_) return visit(edges_);
    const int want = need_[static_cast<std::size_t>(u)];
    if (want == 0) return row(u + 1, visit);
    if (closed_[static_cast<std::size_t>(u)]) return true;
    return pick(u, u + 1, want, visit);
  }

  template <class Visit>
  bool pick(int u, int from, int want, Visit& visit) {
    if (want == 0) return row(u + 1, visit);
    for (int v = from; v < n_; ++v) {
      if (n_ - v < want) break;
      if (closed_[static_cast<std::size_t>(v)] || need_[static_cast<std::size_t>(v)] == 0) continue;
      if (adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) continue;
      adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
      --need_[static_cast<std::size_t>(u)];
      --need_[static_cast<std::size_t>(v)];
      edges_.emplace_back(u, v);
      const bool go = pick(u, v + 1, want - 1, visit);
      edges_.pop_back();
      ++need_[static_cast<std::size_t>(u)];
      ++need_[static_cast<std::size_t>(v)];
      adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 0;
      if (!go) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> need_;
  std::vector<char> closed_;
  std::vector<std::vector<char>> adj_;
  std::vector<Edge> edges_;
  std::uint64_t steps_ = 0;
  std::uint64_t limit_ = 0;
};

std::optional<std::vector<Edge>> random_pairing(const std::vector<int>& need, std::mt19937_64& rng) {
  std::vector<Vertex> stubs;
  for (std::size_t v = 0; v < need.size(); ++v)
    for (int i = 0; i < need[v]; ++i) stubs.push_back(static_cast<Vertex>(v));
  std::shuffle(stubs.begin(), stubs.end(), rng);
  std::set<Edge> edges;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    Vertex u = stubs[i], v = stubs[i + 1];
    if (u == v) return std::nullopt;
    if (u > v) std::swap(u, v);
    if (!edges.insert({u, v}).second) return std::nullopt;
  }
  return std::vector<Edge>(edges.begin(), edges.end());
}

}  // namespace

std::optional<Graph> synthesize(const ForcingContract& contract, int max_vertices, std::uint64_t budget) {
  const int p = static_cast<int>(contract.ports.size());
  for (int i = 0; i < p; ++i)
    if (contract.ports[static_cast<std::size_t>(i)].vertex != i) return std::nullopt;
  const int host = contract.host_degree > 0 ? contract.host_degree : 3;
  std::uint64_t spent = 0;

  for (int n = std::max(p + 1, 1); n <= max_vertices && spent < budget; ++n) {
    // contract sanity is size independent except for vertex ranges
    const Graph probe(n, {});
    const std::string err = check_contract(probe, contract);
    if (!err.empty()) {
      if (err.find("both black and white") != std::string::npos || err.find("names no terminals") != std::string::npos)
        return std::nullopt;
      continue;
    }
    std::vector<int> degree(static_cast<std::size_t>(n), host);
    for (const auto& port : contract.ports) degree[static_cast<std::size_t>(port.vertex)] = port.degree;
    int total = 0;
    for (int d : degree) total += d;
    if (total % 2 != 0) continue;

    std::vector<Edge> fixed;
    if (p > 0) {
      const int d0 = contract.ports[0].degree;
      if (p + d0 > n) continue;
      for (int i = 0; i < d0; ++i) fixed.emplace_back(0, p + i);
    }

    std::optional<Graph> found;
    auto try_edges = [&](const std::vector<Edge>& edges) {
      if (spent >= budget) return false;
      Graph candidate(n, edges);
      if (!is_connected(candidate)) return true;
      ++spent;
      const auto cert = certify(candidate, contract);
      if (cert.certified()) {
        found = std::move(candidate);
        return false;
      }
      return true;
    };

    if (n <= 14) {
      std::vector<char> closed(static_cast<std::size_t>(n), 0);
      if (p > 0) closed[0] = 1;
      DegreeEnumerator gen(degree, fixed, closed);
      gen.run(try_edges, budget * 4096);
    } else {
      std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(n));
      std::vector<int> need = degree;
      for (auto [u, v] : fixed) {
        --need[static_cast<std::size_t>(u)];
        --need[static_cast<std::size_t>(v)];
      }
      for (std::uint64_t attempt = 0; attempt < budget * 64 && spent < budget && !found; ++attempt) {
        auto edges = random_pairing(need, rng);
        if (!edges) continue;
        bool clash = false;
        for (auto e : fixed)
          if (std::find(edges->begin(), edges->end(), e) != edges->end()) clash = true;
        if (clash) continue;
        edges->insert(edges->end(), fixed.begin(), fixed.end());
        if (!try_edges(*edges)) break;
      }
    }
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

nlohmann::json terminal_json(const Terminal& t) {
  return t.pendant ? nlohmann::json{{"pendant", t.index}} : nlohmann::json{{"vertex", t.index}};
}

Terminal terminal_from_json(const nlohmann::json& j) {
  if (j.contains("pendant")) return Terminal::pendant_of(j.at("pendant").get<int>());
  return Terminal::vertex(j.at("vertex").get<int>());
}

nlohmann::json stats_json(const PolarityStats& s) {
  return {{"labelings", s.labelings}, {"black_class_min", s.black_class_min}, {"black_class_max", s.black_class_max}};
}

}  // namespace

nlohmann::json to_json(const ForcingContract& c) {
  nlohmann::json ports = nlohmann::json::array();
  for (const auto& p : c.ports) ports.push_back({{"name", p.name}, {"vertex", p.vertex}, {"degree", p.degree}});
  nlohmann::json black = nlohmann::json::array(), white = nlohmann::json::array();
  for (const auto& t : c.black) black.push_back(terminal_json(t));
  for (const auto& t : c.white) white.push_back(terminal_json(t));
  return {{"name", c.name}, {"mode", std::string(c.mode == Mode::sigma ? "sigma2" : "lucky2")},
          {"ports", ports}, {"black", black}, {"white", white}, {"host_degree", c.host_degree}};
}

ForcingContract contract_from_json(const nlohmann::json& j) {
  try {
    ForcingContract c;
    c.name = j.at("name").get<std::string>();
    const auto mode = j.at("mode").get<std::string>();
    if (mode == "sigma2") c.mode = Mode::sigma;
    else if (mode == "lucky2") c.mode = Mode::lucky;
    else throw InputError("contract mode must be sigma2 or lucky2");
    for (const auto& p : j.at("ports"))
      c.ports.push_back({p.at("name").get<std::string>(), p.at("vertex").get<int>(), p.at("degree").get<int>()});
    for (const auto& t : j.at("black")) c.black.push_back(terminal_from_json(t));
    for (const auto& t : j.at("white")) c.white.push_back(terminal_from_json(t));
    c.host_degree = j.value("host_degree", 3);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed contract: ") + e.what());
  }
}

nlohmann::json to_json(const GadgetCertificate& c) {
  nlohmann::json j;
  j["contract_error"] = c.contract_error;
  j["contexts"] = c.contexts;
  j["contexts_realized"] = c.contexts_realized;
  j["valid_labelings"] = c.valid_labelings;
  j["nodes"] = c.nodes;
  j["degrees_ok"] = c.degrees_ok;
  j["vacuous"] = c.vacuous;
  j["all_conforming"] = c.all_conforming;
  j["both_polarities_realizable"] = c.both_polarities_realizable;
  j["counterexample"] = c.counterexample ? nlohmann::json(*c.counterexample) : nlohmann::json(nullptr);
  j["black_one"] = stats_json(c.black_one);
  j["black_two"] = stats_json(c.black_two);
  j["certified"] = c.certified();
  return j;
}

std::vector<int> Gadget::labels_for(int black_label) const {
  if (black_label != 1 && black_label != 2) throw InputError("black label must be 1 or 2");
  std::vector<int> out = black_one_labels;
  if (black_label == 2)
    for (auto& l : out) l = 3 - l;
  return out;
}

Gadget diamond_gadget() {
  Gadget d;
  d.name = "diamond";
  d.graph = Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {"end:a", "end:b", "twin:c", "twin:d"});
  d.contract.name = d.name;
  d.contract.ports = {{"a", 0, 2}, {"b", 1, 2}};
  d.contract.black = {Terminal::vertex(0), Terminal::vertex(1)};
  d.contract.white = {Terminal::pendant_of(0), Terminal::pendant_of(1)};
  d.black_one_labels = {1, 1, 1, 2};
  return d;
}

Gadget t_gadget() {
  Gadget t;
  t.name = "t";
  t.graph = Graph(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                  {"t", "end:a", "end:b", "twin:c", "twin:d"});
  t.contract.name = t.name;
  t.contract.ports = {{"t", 0, 2}};
  t.contract.black = {Terminal::vertex(0)};
  t.contract.white = {Terminal::vertex(1), Terminal::vertex(2)};
  t.black_one_labels = {1, 2, 2, 1, 2};
  return t;
}

namespace {

// Ring items: a plain vertex, or a diamond occupying four vertices.
struct Ring {
  GraphBuilder builder;
  std::vector<int> labels;           // black-one polarity
  Vertex first_entry = -1;
  Vertex last_exit = -1;
  int last_label = 0;
  int diamonds = 0;

  void link(Vertex entry, Vertex exit) {
    if (last_exit >= 0) builder.add_edge(last_exit, entry);
    else first_entry = entry;
    last_exit = exit;
  }

  Vertex plain(const std::string& role, int label) {
    const Vertex v = builder.add_vertex(role);
    labels.push_back(label);
    link(v, v);
    last_label = label;
    return v;
  }

  void diamond() {
    const std::string tag = "dia" + std::to_string(diamonds++) + ":";
    const int end_label = 3 - last_label;
    const Vertex a = builder.add_vertex(tag + "a");
    const Vertex b = builder.add_vertex(tag + "b");
    const Vertex c = builder.add_vertex(tag + "c");
    const Vertex d = builder.add_vertex(tag + "d");
    builder.add_edge(a, c);
    builder.add_edge(a, d);
    builder.add_edge(b, c);
    builder.add_edge(b, d);
    builder.add_edge(c, d);
    labels.insert(labels.end(), {end_label, end_label, 1, 2});
    link(a, b);
    last_label = end_label;
  }

  void close() { builder.add_edge(last_exit, first_entry); }
};

}  // namespace

VariableGadget variable_gadget(int num_ports_true, int num_ports_false) {
  if (num_ports_true < 0 || num_ports_false < 0) throw InputError("port counts must be nonnegative");
  const int kp = std::max(1, num_ports_true);
  const int kn = std::max(1, num_ports_false);
  Ring ring;
  VariableGadget out;
  for (int i = 0; i < kp; ++i) {
    if (i > 0) ring.diamond();
    out.pos_ports.push_back(ring.plain("pos:" + std::to_string(i + 1), 1));
  }
  ring.diamond();
  ring.diamond();
  for (int i = 0; i < kn; ++i) {
    if (i > 0) ring.diamond();
    out.neg_ports.push_back(ring.plain("neg:" + std::to_string(i + 1), 2));
  }
  ring.diamond();
  ring.diamond();
  ring.close();

  Gadget& g = out.gadget;
  g.name = "variable-" + std::to_string(kp) + "-" + std::to_string(kn);
  g.graph = ring.builder.build();
  g.black_one_labels = ring.labels;
  g.contract.name = g.name;
  for (std::size_t i = 0; i < out.pos_ports.size(); ++i) {
    g.contract.ports.push_back({"x" + std::to_string(i + 1), out.pos_ports[i], 2});
    g.contract.black.push_back(Terminal::vertex(out.pos_ports[i]));
  }
  for (std::size_t i = 0; i < out.neg_ports.size(); ++i) {
    g.contract.ports.push_back({"nx" + std::to_string(i + 1), out.neg_ports[i], 2});
    g.contract.white.push_back(Terminal::vertex(out.neg_ports[i]));
  }
  return out;
}

Gadget prism_decoration() {
  Gadget f;
  f.name = "prism";
  f.graph = Graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
                  {"root", "hub:1", "hub:2", "rim:3", "rim:4", "rim:5", "rim:6"});
  f.contract.name = f.name;
  f.contract.ports = {{"root", 0, 2}};
  f.contract.black = {Terminal::pendant_of(0), Terminal::vertex(0), Terminal::vertex(1), Terminal::vertex(2)};
  f.black_one_labels = {1, 1, 1, 2, 1, 1, 2};
  return f;
}

ThreePortGadget three_port_gadget() {
  Ring ring;
  ThreePortGadget out;
  for (int i = 0; i < 3; ++i) {
    out.ports.push_back(ring.plain("port:" + std::to_string(i + 1), 1));
    ring.diamond();
  }
  const Vertex r = ring.plain("anchor", 1);
  ring.diamond();
  ring.close();
  const Gadget deco = prism_decoration();
  const Vertex offset = ring.builder.add_graph(deco.graph, "deco:");
  ring.builder.add_edge(r, offset);
  ring.labels.insert(ring.labels.end(), deco.black_one_labels.begin(), deco.black_one_labels.end());

  Gadget& g = out.gadget;
  g.name = "three-port";
  g.graph = ring.builder.build();
  g.black_one_labels = ring.labels;
  g.contract.name = g.name;
  for (std::size_t i = 0; i < out.ports.size(); ++i) {
    g.contract.ports.push_back({"p" + std::to_string(i + 1), out.ports[i], 2});
    g.contract.black.push_back(Terminal::vertex(out.ports[i]));
  }
  g.contract.black.push_back(Terminal::vertex(r));
  for (Vertex v = 0; v < g.graph.vertex_count(); ++v)
    if (g.graph.role(v).rfind("dia", 0) == 0 && (g.graph.role(v).back() == 'a' || g.graph.role(v).back() == 'b'))
      g.contract.white.push_back(Terminal::vertex(v));
  return out;
}

}  // namespace sigmaforge
