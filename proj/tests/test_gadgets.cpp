#include <gtest/gtest.h>

#include <set>

#include "sigmaforge/errors.hpp"
#include "sigmaforge/gadgets.hpp"

using namespace sigmaforge;

namespace {

struct Expected {
  Gadget gadget;
  std::uint64_t labelings;
  std::uint64_t contexts_realized;
};

bool has_closed_twins(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.adjacent(u, v)) continue;
      std::set<Vertex> nu(g.neighbors(u).begin(), g.neighbors(u).end()), nv(g.neighbors(v).begin(), g.neighbors(v).end());
      nu.insert(u);
      nv.insert(v);
      if (nu == nv) return true;
    }
  return false;
}

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    for (Vertex w : g.neighbors(u))
      if (w != v && g.adjacent(v, w)) return true;
  return false;
}

}  // namespace

TEST(Certify, ShippedGadgets) {
  const std::vector<Expected> cases = {
      {diamond_gadget(), 4, 2},           {t_gadget(), 8, 2},
      {prism_decoration(), 4, 2},         {variable_gadget(1, 1).gadget, 128, 4},
      {variable_gadget(2, 2).gadget, 2048, 16}, {three_port_gadget().gadget, 512, 8},
  };
  for (const auto& c : cases) {
    const auto cert = certify(c.gadget.graph, c.gadget.contract);
    EXPECT_TRUE(cert.certified()) << c.gadget.name;
    EXPECT_TRUE(cert.all_conforming) << c.gadget.name;
    EXPECT_TRUE(cert.both_polarities_realizable) << c.gadget.name;
    EXPECT_FALSE(cert.vacuous);
    EXPECT_EQ(cert.valid_labelings, c.labelings) << c.gadget.name;
    EXPECT_EQ(cert.contexts_realized, c.contexts_realized) << c.gadget.name;
    EXPECT_EQ(cert.contexts, std::uint64_t{1} << c.gadget.contract.ports.size());
    EXPECT_EQ(cert.black_one.labelings + cert.black_two.labelings, cert.valid_labelings);
  }
}

TEST(Certify, ThreePortCounts) {
  const auto g = three_port_gadget();
  EXPECT_EQ(g.gadget.graph.vertex_count(), 27);
  const auto cert = certify(g.gadget.graph, g.gadget.contract);
  EXPECT_EQ(cert.black_one.labelings, 256u);
  EXPECT_EQ(cert.black_two.labelings, 256u);
  // the black class is 13 vertices in every labeling; the other class is 14
  EXPECT_EQ(cert.black_one.black_class_min, 13);
  EXPECT_EQ(cert.black_one.black_class_max, 13);
}

TEST(Certify, StoredPolarityLabelingsAreValid) {
  for (const Gadget& g : {diamond_gadget(), t_gadget(), prism_decoration(), variable_gadget(2, 3).gadget,
                          three_port_gadget().gadget}) {
    for (int black : {1, 2}) {
      // reproduce the certification host: gadget plus one pendant per port
      GraphBuilder b;
      b.add_graph(g.graph);
      SearchConfig cfg;
      cfg.mode = Mode::lucky;
      for (const auto& port : g.contract.ports) {
        const Vertex p = b.add_vertex();
        b.add_edge(port.vertex, p);
        cfg.unchecked_edges.emplace_back(port.vertex, p);
      }
      LabelSearch search(b.build(), cfg);
      const auto want = g.labels_for(black);
      for (std::size_t v = 0; v < want.size(); ++v) search.restrict(static_cast<Vertex>(v), {want[v]});
      std::vector<int> labels;
      EXPECT_EQ(search.find(1'000'000, labels), LabelSearch::Status::found) << g.name << " black=" << black;
    }
  }
}

TEST(Certify, ClosedTwinPairDiffers) {
  ForcingContract c;
  c.name = "twins";
  c.host_degree = 0;
  c.black = {Terminal::vertex(0)};
  c.white = {Terminal::vertex(1)};
  const auto cert = certify(Graph(2, {{0, 1}}), c);
  EXPECT_TRUE(cert.certified());
  EXPECT_EQ(cert.valid_labelings, 2u);
}

TEST(Certify, TriangleIsVacuous) {
  ForcingContract c;
  c.name = "triangle";
  c.host_degree = 0;
  c.black = {Terminal::vertex(0), Terminal::vertex(1), Terminal::vertex(2)};
  const auto cert = certify(families::complete(3), c);
  EXPECT_TRUE(cert.vacuous);
  EXPECT_FALSE(cert.all_conforming);
  EXPECT_EQ(cert.valid_labelings, 0u);
}

TEST(Certify, DeletedEdgeBreaksCertification) {
  // with degree checks relaxed, every single-edge deletion of the diamond admits a violating labeling
  const auto d = diamond_gadget();
  for (std::size_t skip = 0; skip < d.graph.edges().size(); ++skip) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d.graph.edges().size(); ++i)
      if (i != skip) edges.push_back(d.graph.edges()[i]);
    const Graph h(d.graph.vertex_count(), edges);
    auto c = d.contract;
    c.host_degree = 0;
    for (auto& port : c.ports) port.degree = h.degree(port.vertex);
    const auto cert = certify(h, c);
    EXPECT_FALSE(cert.all_conforming) << skip;
    EXPECT_TRUE(cert.counterexample) << skip;
    EXPECT_FALSE(certify(h, d.contract).certified()) << skip;
  }

  auto t = t_gadget();
  std::vector<Edge> edges = t.graph.edges();
  edges.erase(edges.begin() + 2);
  t.contract.host_degree = 0;
  const auto cert = certify(Graph(5, edges), t.contract);
  EXPECT_FALSE(cert.all_conforming);
  ASSERT_TRUE(cert.counterexample);
  EXPECT_EQ(cert.counterexample->size(), 6u);
}

TEST(Certify, ContradictoryContract) {
  auto d = diamond_gadget();
  d.contract.white.push_back(Terminal::vertex(0));
  const auto cert = certify(d.graph, d.contract);
  EXPECT_FALSE(cert.contract_error.empty());
  EXPECT_FALSE(cert.certified());
}

TEST(Certify, SizeAndNodeBudgets) {
  ForcingContract c;
  c.host_degree = 0;
  c.black = {Terminal::vertex(0)};
  EXPECT_THROW(certify(families::cycle(70), c), BudgetError);
  const auto vg = variable_gadget(2, 2).gadget;
  EXPECT_THROW(certify(vg.graph, vg.contract, 10), BudgetError);
}

TEST(Synthesize, FindsDegreeCompletionGadget) {
  const auto t = t_gadget();
  const auto g = synthesize(t.contract, 5, 100000);
  ASSERT_TRUE(g);
  EXPECT_EQ(*g, t.graph.without_roles());
  EXPECT_TRUE(certify(*g, t.contract).certified());
}

TEST(Synthesize, FindsTwinAndTriangleFragment) {
  const auto d = diamond_gadget();
  const auto g = synthesize(d.contract, 4, 100000);
  ASSERT_TRUE(g);
  EXPECT_TRUE(certify(*g, d.contract).certified());
  EXPECT_TRUE(has_closed_twins(*g));
  EXPECT_TRUE(has_triangle(*g));
}

TEST(Synthesize, ContradictoryContractGivesNone) {
  auto t = t_gadget().contract;
  t.white.push_back(Terminal::vertex(0));
  EXPECT_FALSE(synthesize(t, 6, 1000));
}

TEST(VariableGadget, PortsAndDegrees) {
  for (int k : {1, 2, 3}) {
    const auto vg = variable_gadget(k, k);
    EXPECT_EQ(vg.pos_ports.size(), static_cast<std::size_t>(k));
    EXPECT_EQ(vg.neg_ports.size(), static_cast<std::size_t>(k));
    for (Vertex p : vg.pos_ports) EXPECT_EQ(vg.gadget.graph.degree(p), 2);
    for (Vertex p : vg.neg_ports) EXPECT_EQ(vg.gadget.graph.degree(p), 2);
  }
  const auto padded = variable_gadget(0, 2);
  EXPECT_EQ(padded.pos_ports.size(), 1u);
  EXPECT_THROW(variable_gadget(-1, 1), InputError);
}

TEST(VariableGadget, PortsShareLabelInEveryLabeling) {
  const auto vg = variable_gadget(2, 2);
  GraphBuilder b;
  b.add_graph(vg.gadget.graph);
  SearchConfig cfg;
  cfg.mode = Mode::lucky;
  for (const auto& port : vg.gadget.contract.ports) {
    const Vertex p = b.add_vertex();
    b.add_edge(port.vertex, p);
    cfg.unchecked_edges.emplace_back(port.vertex, p);
  }
  LabelSearch search(b.build(), cfg);
  std::uint64_t count = 0;
  bool ok = true;
  const auto status = search.enumerate(10'000'000, [&](const std::vector<int>& l) {
    ++count;
    const int x = l[static_cast<std::size_t>(vg.pos_ports[0])];
    ok = ok && l[static_cast<std::size_t>(vg.pos_ports[1])] == x;
    for (Vertex n : vg.neg_ports) ok = ok && l[static_cast<std::size_t>(n)] != x;
    return true;
  });
  EXPECT_EQ(status, LabelSearch::Status::exhausted);
  EXPECT_EQ(count, 2048u);
  EXPECT_TRUE(ok);
}

TEST(ContractJson, RoundTrip) {
  for (const Gadget& g : {diamond_gadget(), prism_decoration(), three_port_gadget().gadget}) {
    EXPECT_EQ(contract_from_json(to_json(g.contract)), g.contract);
  }
  const auto j = to_json(certify(t_gadget().graph, t_gadget().contract));
  EXPECT_EQ(j.at("all_conforming"), true);
  EXPECT_EQ(j.at("both_polarities_realizable"), true);
}
