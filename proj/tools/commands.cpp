#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sigmaforge/bundle.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/reductions.hpp"
#include "sigmaforge/sat.hpp"
#include "sigmaforge/solver.hpp"

namespace sigmaforge::cli {

using nlohmann::json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "fail";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::pass: return 0;
    case Verdict::fail: return 1;
    case Verdict::inconclusive: return 3;
  }
  return 1;
}

Budget resolve_budget(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return {flag_value, "flag"};
  if (const char* env = std::getenv("SIGMA_FORGE_BUDGET"); env && *env) {
    char* end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) throw InputError("SIGMA_FORGE_BUDGET must be a positive integer");
    return {value, "env"};
  }
  return {kDefaultBudget, "default"};
}

json RunReport::to_json() const {
  json j = {{"command", command},
            {"inputs", inputs},
            {"budget", {{"nodes", budget.nodes}, {"source", budget.source}}},
            {"nodes", nodes},
            {"results", results},
            {"verdict", verdict_name(verdict)}};
  if (wall_seconds >= 0) j["wall_seconds"] = wall_seconds;
  return j;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string or_none(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

bool witness_valid(const Graph& g, Mode mode, const Labeling& w) {
  if (mode == Mode::lucky) return is_lucky_labeling(g, w);
  std::vector<int> parts(w.label_of.begin(), w.label_of.end());
  return is_sigma_coloring(g, VertexSetPartition(w.k, std::move(parts)));
}

json assignment_json(const Assignment& a) {
  json out = json::array();
  for (bool v : a.value_of) out.push_back(v);
  return out;
}

}  // namespace

json file_input(const std::string& path) { return {{"path", path}, {"sha256", sha256_hex(slurp(path))}}; }

// ------------------------------------------------------------------ solve

RunReport cmd_solve(const SolveArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "solve";
  rep.budget = budget;
  rep.inputs["graph"] = file_input(a.graph);
  const Graph g = read_graph_file(a.graph);
  const Mode mode = parse_mode(a.mode);
  const SolveResult r = mode == Mode::sigma ? sigma_number(g, a.max_k, budget.nodes) : lucky_number(g, a.max_k, budget.nodes);
  const bool verified = r.witness && witness_valid(g, mode, *r.witness);
  rep.nodes = r.nodes;
  rep.results = to_json(r);
  rep.results["mode"] = mode_name(mode);
  rep.results["max_k"] = a.max_k;
  rep.results["witness_verified"] = verified;
  if (r.value) rep.verdict = verified ? Verdict::pass : Verdict::fail;
  else rep.verdict = r.exhausted ? Verdict::pass : Verdict::inconclusive;
  rep.summary = std::string(mode_name(mode)) + " number " + (r.value ? std::to_string(*r.value) : "none <= " + std::to_string(a.max_k)) +
                (r.exhausted ? " (exact)" : " (budget hit)");
  return rep;
}

// ------------------------------------------------------------------ minpart

RunReport cmd_minpart(const MinPartArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "minpart";
  rep.budget = budget;
  rep.inputs["graph"] = file_input(a.graph);
  const Graph g = read_graph_file(a.graph);
  try {
    const MinPartResult r = min_part_size(g, budget.nodes);
    rep.nodes = r.nodes;
    rep.results = to_json(r);
    bool verified = false;
    if (r.witness && r.min_size) {
      const auto& w = *r.witness;
      verified = is_sigma_coloring(g, w) && std::min(w.part_size(1), w.part_size(2)) == *r.min_size;
    }
    rep.results["witness_verified"] = verified;
    if (r.min_size && !verified) rep.verdict = Verdict::fail;
    else rep.verdict = r.exhausted ? Verdict::pass : Verdict::inconclusive;
    rep.summary = "minimum part size " + or_none(r.min_size) + (r.exhausted ? " (exact)" : " (best so far)");
  } catch (const PromiseError& e) {
    rep.results = {{"error", e.what()}};
    rep.verdict = Verdict::fail;
    rep.summary = std::string("promise violated: ") + e.what();
  }
  return rep;
}

// ------------------------------------------------------------------ reduce

RunReport cmd_reduce(const ReduceArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "reduce";
  rep.budget = budget;
  rep.results["kind"] = a.kind;
  Graph graph;
  json trace;
  if (a.kind == "remark2") {
    rep.inputs["k"] = a.k;
    graph = build_remark2_graph(a.k);
    const auto part = remark2_coloring(a.k);
    trace = {{"kind", "remark2"}, {"params", {{"k", a.k}}}, {"coloring", partition_json(part)},
             {"coloring_valid", is_sigma_coloring(graph, part)}};
  } else {
    if (a.input.empty()) throw InputError("reduce " + a.kind + " needs an input file");
    rep.inputs["input"] = file_input(a.input);
    std::optional<ReductionOutput> r;
    if (a.kind == "nae3sat") {
      r = build_nae_reduction(read_dimacs_file(a.input, Flavor::nae));
    } else if (a.kind == "maxcut") {
      r = build_maxcut_reduction(read_dimacs_file(a.input, Flavor::nae));
    } else if (a.kind == "cubic1in3") {
      r = build_1in3_reduction(read_dimacs_file(a.input, Flavor::one_in_three), a.skip_nae_gate);
      if (!r) {
        rep.results["gated"] = true;
        rep.verdict = Verdict::pass;
        rep.summary = "no NAE assignment, so no 1-in-3 assignment; nothing built";
        return rep;
      }
    } else if (a.kind == "sigmak") {
      rep.inputs["k"] = a.k;
      r = build_sigma_k_reduction(read_graph_file(a.input), a.k);
    } else {
      throw InputError("unknown reduction '" + a.kind + "'");
    }
    graph = r->graph;
    trace = trace_json(*r);
    rep.results["params"] = r->params;
  }
  const std::string text = serialize_graph(graph);
  rep.results["vertices"] = graph.vertex_count();
  rep.results["edges"] = graph.edge_count();
  rep.results["graph_sha256"] = sha256_hex(text);
  if (a.graph_out.empty()) rep.results["graph"] = text;
  else spit(a.graph_out, text);
  if (a.trace_out.empty()) rep.results["trace"] = trace;
  else spit(a.trace_out, trace.dump(2) + "\n");
  rep.verdict = Verdict::pass;
  if (trace.contains("coloring_valid") && !trace["coloring_valid"].get<bool>()) rep.verdict = Verdict::fail;
  rep.summary = a.kind + ": " + std::to_string(graph.vertex_count()) + " vertices, " + std::to_string(graph.edge_count()) + " edges";
  return rep;
}

// ------------------------------------------------------------------ roundtrip

namespace {

void roundtrip_nae(RunReport& rep, const Formula& f, const Budget& budget) {
  const auto oracle = nae_satisfiable(f);
  const auto r = build_nae_reduction(f);
  const auto s = decide_two(r.graph, Mode::lucky, budget.nodes);
  rep.nodes = s.nodes;
  auto& res = rep.results;
  res["oracle_satisfiable"] = oracle.has_value();
  res["vertices"] = r.graph.vertex_count();
  res["three_regular"] = is_k_regular(r.graph, 3);
  res["solve"] = to_json(s);
  if (!s.value && !s.exhausted) {
    rep.verdict = Verdict::inconclusive;
    rep.summary = "reduced graph solve ran out of budget";
    return;
  }
  bool ok = oracle.has_value() == s.value.has_value() && is_k_regular(r.graph, 3);
  if (oracle && s.value) {
    const auto built = nae_coloring_from_assignment(r, *oracle);
    const auto extracted = nae_assignment_from_coloring(r, *s.witness);
    res["constructed_valid"] = is_lucky_labeling(r.graph, built);
    res["extracted"] = assignment_json(extracted);
    res["extracted_valid"] = nae_holds(f, extracted);
    ok = ok && res["constructed_valid"].get<bool>() && res["extracted_valid"].get<bool>();
  }
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.summary = std::string("NAE ") + (oracle ? "satisfiable" : "unsatisfiable") + ", reduced graph " +
                (s.value ? "has" : "has no") + " lucky 2-labeling";
}

void roundtrip_maxcut(RunReport& rep, const Formula& f) {
  const auto oracle = nae_satisfiable(f);
  const auto r = build_maxcut_reduction(f);
  const auto cut = max_cut(r.graph, r.weights);
  const long long threshold = maxcut_threshold(r);
  auto& res = rep.results;
  res["oracle_satisfiable"] = oracle.has_value();
  res["vertices"] = r.graph.vertex_count();
  res["max_cut"] = cut.size;
  res["threshold"] = threshold;
  res["side"] = cut.side;
  const bool ok = cut.size <= threshold && (cut.size == threshold) == oracle.has_value() &&
                  cut_value(r.graph, cut.side, r.weights) == cut.size;
  rep.verdict = ok ? Verdict::pass : Verdict::fail;
  rep.summary = "max cut " + std::to_string(cut.size) + " vs 11k = " + std::to_string(threshold) + ", NAE " +
                (oracle ? "satisfiable" : "unsatisfiable");
}

void roundtrip_1in3(RunReport& rep, const Formula& f, const Budget& budget) {
  const auto nae = nae_satisfiable(f);
  const auto exact = one_in_three_satisfiable(f);
  auto& res = rep.results;
  res["nae_satisfiable"] = nae.has_value();
  res["one_in_three_satisfiable"] = exact.has_value();
  const auto r = build_1in3_reduction(f);
  if (!r) {
    res["gated"] = true;
    rep.verdict = nae ? Verdict::fail : Verdict::pass;
    rep.summary = "gate rejected the formula (no NAE assignment)";
    return;
  }
  const long long theta = theta_threshold(*r);
  res["theta"] = theta;
  res["t_beta"] = r->params.at("t_beta");
  res["f_beta"] = r->params.at("f_beta");
  res["vertices"] = r->graph.vertex_count();
  bool ok = true;
  if (exact) {
    const auto lab = one_in_three_coloring_from_assignment(*r, *exact);
    const auto ones = std::count(lab.label_of.begin(), lab.label_of.end(), 1);
    res["constructed_part"] = ones;
    ok = ok && ones == theta;
  }
  const auto m = min_part_size(r->graph, budget.nodes);
  rep.nodes = m.nodes;
  res["min_part"] = to_json(m);
  const bool at_or_below = m.min_size && *m.min_size <= theta;
  if (exact) {
    // equality needs the optimum
    if (!m.exhausted) {
      rep.verdict = ok ? Verdict::inconclusive : Verdict::fail;
    } else {
      rep.verdict = ok && m.min_size == theta ? Verdict::pass : Verdict::fail;
    }
  } else if (at_or_below) {
    rep.verdict = Verdict::fail;
  } else {
    rep.verdict = !ok ? Verdict::fail : (m.exhausted ? Verdict::pass : Verdict::inconclusive);
  }
  rep.summary = "min part " + or_none(m.min_size) + (m.exhausted ? " (exact)" : " (best so far)") + " vs theta " +
                std::to_string(theta) + ", 1-in-3 " + (exact ? "satisfiable" : "unsatisfiable");
}

void roundtrip_sigmak(RunReport& rep, const Graph& g_star, int k, const Budget& budget) {
  const auto coloring = proper_coloring(g_star, k);
  const auto r = build_sigma_k_reduction(g_star, k);
  auto& res = rep.results;
  res["k"] = k;
  res["colorable"] = coloring.has_value();
  res["vertices"] = r.graph.vertex_count();
  bool ok = true;
  if (coloring) {
    try {
      const auto part = sigma_k_coloring_from_proper_coloring(r, *coloring);
      const auto back = proper_coloring_from_sigma_k(r, part);
      res["constructed_valid"] = is_sigma_coloring(r.graph, part);
      res["extracted_proper"] = is_proper_coloring(g_star, back, k);
      ok = res["constructed_valid"].get<bool>() && res["extracted_proper"].get<bool>();
    } catch (const ConstructionError& e) {
      res["construction_error"] = e.what();
      ok = false;
    }
  }
  const auto s = sigma_number(r.graph, k, budget.nodes);
  rep.nodes = s.nodes;
  res["solve"] = to_json(s);
  if (!s.value && !s.exhausted) {
    rep.verdict = ok ? Verdict::inconclusive : Verdict::fail;
  } else {
    rep.verdict = ok && s.value.has_value() == coloring.has_value() ? Verdict::pass : Verdict::fail;
  }
  rep.summary = "g* " + std::string(coloring ? "is" : "is not") + " " + std::to_string(k) + "-colorable; sigma(G**) " +
                (s.value ? "= " + std::to_string(*s.value) : std::string("> ") + std::to_string(k));
}

}  // namespace

RunReport cmd_roundtrip(const RoundtripArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "roundtrip";
  rep.budget = budget;
  rep.inputs["input"] = file_input(a.input);
  rep.inputs["reduction"] = a.reduction;
  rep.results["reduction"] = a.reduction;
  try {
    if (a.reduction == "nae3sat") roundtrip_nae(rep, read_dimacs_file(a.input, Flavor::nae), budget);
    else if (a.reduction == "maxcut") roundtrip_maxcut(rep, read_dimacs_file(a.input, Flavor::nae));
    else if (a.reduction == "cubic1in3") roundtrip_1in3(rep, read_dimacs_file(a.input, Flavor::one_in_three), budget);
    else if (a.reduction == "sigmak") {
      rep.inputs["k"] = a.k;
      roundtrip_sigmak(rep, read_graph_file(a.input), a.k, budget);
    } else {
      throw InputError("unknown reduction '" + a.reduction + "'");
    }
  } catch (const BudgetError& e) {
    rep.results["error"] = e.what();
    rep.verdict = Verdict::inconclusive;
    rep.summary = std::string("inconclusive: ") + e.what();
  }
  return rep;
}

// ------------------------------------------------------------------ certify

RunReport cmd_certify(const CertifyArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "certify";
  rep.budget = budget;
  rep.inputs["bundle"] = file_input(a.bundle);
  const GadgetBundle b = read_bundle_file(a.bundle);
  rep.results["name"] = b.name;
  rep.results["vertices"] = b.graph.vertex_count();
  try {
    const auto o = recertify(b, budget.nodes);
    rep.nodes = o.fresh.nodes;
    rep.results["hash_matches"] = o.hash_matches;
    rep.results["certificate_matches"] = o.certificate_matches;
    rep.results["certificate"] = to_json(o.fresh);
    rep.verdict = o.pass() ? Verdict::pass : Verdict::fail;
    std::string why;
    if (!o.fresh.contract_error.empty()) why = "contract: " + o.fresh.contract_error;
    else if (!o.fresh.degrees_ok) why = "port or host degrees differ from the contract";
    else if (o.fresh.vacuous) why = "no valid labeling at all";
    else if (!o.fresh.all_conforming) why = "a valid labeling breaks the contract";
    else if (!o.fresh.both_polarities_realizable) why = "only one polarity is realizable";
    else if (!o.hash_matches) why = "content hash mismatch";
    else if (!o.certificate_matches) why = "stored certificate differs";
    rep.summary = b.name + ": " + (o.pass() ? "certified" : "rejected, " + why);
  } catch (const BudgetError& e) {
    rep.results["error"] = e.what();
    rep.verdict = Verdict::inconclusive;
    rep.summary = b.name + ": inconclusive, " + e.what();
  }
  return rep;
}

// ------------------------------------------------------------------ oracle

RunReport cmd_oracle(const OracleArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "oracle";
  rep.budget = budget;
  rep.inputs["input"] = file_input(a.input);
  try {
    if (a.maxcut) {
      const Graph g = read_graph_file(a.input);
      const auto cut = max_cut(g);
      rep.results = {{"max_cut", cut.size}, {"side", cut.side}};
      rep.summary = "max cut " + std::to_string(cut.size);
    } else {
      const Flavor flavor = parse_flavor(a.flavor);
      const Formula f = read_dimacs_file(a.input, flavor);
      rep.results["flavor"] = flavor_name(flavor);
      const auto nae = nae_satisfiable(f);
      rep.results["nae"] = nae ? assignment_json(*nae) : json(nullptr);
      rep.summary = std::string("NAE ") + (nae ? "satisfiable" : "unsatisfiable");
      if (flavor == Flavor::one_in_three) {
        const auto exact = one_in_three_satisfiable(f);
        rep.results["one_in_three"] = exact ? assignment_json(*exact) : json(nullptr);
        rep.summary += std::string(", 1-in-3 ") + (exact ? "satisfiable" : "unsatisfiable");
      }
    }
    rep.verdict = Verdict::pass;
  } catch (const BudgetError& e) {
    rep.results["error"] = e.what();
    rep.verdict = Verdict::inconclusive;
    rep.summary = std::string("inconclusive: ") + e.what();
  }
  return rep;
}

// ------------------------------------------------------------------ gadget export

RunReport cmd_gadget_export(const GadgetExportArgs& a, const Budget& budget) {
  RunReport rep;
  rep.command = "gadget-export";
  rep.budget = budget;
  rep.verdict = Verdict::pass;
  json written = json::array();
  for (const auto& b : shipped_bundles()) {
    const auto path = write_bundle(b, a.dir);
    const bool certified = recertify(b).pass();
    if (!certified) rep.verdict = Verdict::fail;
    written.push_back({{"name", b.name}, {"path", path}, {"hash", b.hash}, {"certified", certified}});
  }
  rep.results["bundles"] = written;
  rep.summary = std::to_string(written.size()) + " bundles written to " + a.dir;
  return rep;
}

}  // namespace sigmaforge::cli
