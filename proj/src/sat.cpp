#include "sigmaforge/sat.hpp"

#include <bit>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sigmaforge/errors.hpp"

namespace sigmaforge {

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::nae: return "nae";
    case Flavor::one_in_three: return "1in3";
    case Flavor::plain: return "plain";
  }
  return "plain";
}

Flavor parse_flavor(std::string_view text) {
  if (text == "nae") return Flavor::nae;
  if (text == "1in3" || text == "one_in_three") return Flavor::one_in_three;
  if (text == "plain") return Flavor::plain;
  throw InputError("unknown flavor '" + std::string(text) + "'");
}

namespace {

// Shared between validate() and the parser; `line_of` maps clause index to a line number (0 = none).
void check_formula(const Formula& f, const std::vector<std::size_t>& line_of) {
  auto fail = [&](std::size_t clause, const std::string& msg) {
    const std::size_t line = clause < line_of.size() ? line_of[clause] : 0;
    if (line > 0) throw ParseError(line, msg);
    throw InputError("clause " + std::to_string(clause + 1) + ": " + msg);
  };
  if (f.num_vars < 1) throw InputError("formula needs at least one variable");
  std::vector<int> occurrences(static_cast<std::size_t>(f.num_vars), 0);
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    for (Literal lit : f.clauses[c]) {
      if (lit == 0 || std::abs(lit) > f.num_vars) fail(c, "literal " + std::to_string(lit) + " out of range");
      if (f.flavor == Flavor::one_in_three && lit < 0) fail(c, "negated literal not allowed in 1-in-3 formulas");
      ++occurrences[static_cast<std::size_t>(std::abs(lit) - 1)];
    }
  }
  if (f.flavor != Flavor::one_in_three) return;
  for (int v = 1; v <= f.num_vars; ++v) {
    const int count = occurrences[static_cast<std::size_t>(v - 1)];
    if (count == 3) continue;
    // name the last clause mentioning v, or the first clause if v never occurs
    std::size_t where = 0;
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
      for (Literal lit : f.clauses[c])
        if (std::abs(lit) == v) where = c;
    fail(where, "variable " + std::to_string(v) + " occurs " + std::to_string(count) + " times (1-in-3 needs 3)");
  }
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int to_int(std::string_view s, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, "expected integer, got '" + std::string(s) + "'");
  return value;
}

}  // namespace

void validate(const Formula& f) { check_formula(f, {}); }

Formula parse_dimacs(std::string_view text, Flavor flavor) {
  Formula f;
  f.flavor = flavor;
  std::vector<std::size_t> line_of;
  bool have_header = false;
  int declared_clauses = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == 'c') continue;
    if (tok[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      if (tok.size() != 4 || tok[1] != "cnf") throw ParseError(line_no, "header must be 'p cnf <vars> <clauses>'");
      f.num_vars = to_int(tok[2], line_no);
      declared_clauses = to_int(tok[3], line_no);
      if (f.num_vars < 1 || declared_clauses < 0) throw ParseError(line_no, "bad counts in header");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before header");
    if (tok.size() != 4 || tok[3] != "0")
      throw ParseError(line_no, "clause must have exactly 3 literals followed by 0");
    Clause clause{};
    for (int i = 0; i < 3; ++i) {
      clause[static_cast<std::size_t>(i)] = to_int(tok[static_cast<std::size_t>(i)], line_no);
      if (clause[static_cast<std::size_t>(i)] == 0) throw ParseError(line_no, "clause must have exactly 3 literals");
    }
    f.clauses.push_back(clause);
    line_of.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'p cnf' header");
  if (static_cast<int>(f.clauses.size()) != declared_clauses)
    throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                  std::to_string(f.clauses.size()));
  check_formula(f, line_of);
  return f;
}

std::string serialize_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

Formula read_dimacs_file(const std::string& path, Flavor flavor) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open formula file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str(), flavor);
}

bool Assignment::literal(Literal lit) const {
  const bool v = value_of.at(static_cast<std::size_t>(std::abs(lit) - 1));
  return lit > 0 ? v : !v;
}

bool nae_holds(const Formula& f, const Assignment& a) {
  if (static_cast<int>(a.value_of.size()) != f.num_vars) return false;
  for (const auto& c : f.clauses) {
    const int t = a.literal(c[0]) + a.literal(c[1]) + a.literal(c[2]);
    if (t == 0 || t == 3) return false;
  }
  return true;
}

bool one_in_three_holds(const Formula& f, const Assignment& a) {
  if (static_cast<int>(a.value_of.size()) != f.num_vars) return false;
  for (const auto& c : f.clauses)
    if (a.literal(c[0]) + a.literal(c[1]) + a.literal(c[2]) != 1) return false;
  return true;
}

namespace {

template <class Accept>
std::optional<Assignment> brute(const Formula& f, Accept accept) {
  if (f.num_vars > kMaxOracleVars)
    throw BudgetError("oracle limited to " + std::to_string(kMaxOracleVars) + " variables");
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  Assignment a;
  a.value_of.resize(static_cast<std::size_t>(f.num_vars));
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < f.num_vars; ++i) a.value_of[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
    if (accept(f, a)) return a;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Assignment> nae_satisfiable(const Formula& f) { return brute(f, nae_holds); }

std::optional<Assignment> one_in_three_satisfiable(const Formula& f) { return brute(f, one_in_three_holds); }

Formula negate_all(const Formula& f) {
  Formula out = f;
  for (auto& c : out.clauses)
    for (auto& lit : c) lit = -lit;
  return out;
}

Assignment complement(const Assignment& a) {
  Assignment out = a;
  out.value_of.flip();
  return out;
}

namespace {

std::vector<int> unit_weights_if_empty(const Graph& g, const std::vector<int>& weights) {
  if (weights.empty()) return std::vector<int>(static_cast<std::size_t>(g.edge_count()), 1);
  if (static_cast<int>(weights.size()) != g.edge_count()) throw InputError("weight table does not match edge count");
  return weights;
}

}  // namespace

std::int64_t cut_value(const Graph& g, const std::vector<int>& side, const std::vector<int>& weights) {
  if (static_cast<int>(side.size()) != g.vertex_count()) throw InputError("cut side vector has wrong length");
  const auto w = unit_weights_if_empty(g, weights);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto [u, v] = g.edges()[i];
    if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) total += w[i];
  }
  return total;
}

CutResult max_cut(const Graph& g, const std::vector<int>& weights) {
  const int n = g.vertex_count();
  if (n > kMaxCutVertices) throw BudgetError("max_cut limited to " + std::to_string(kMaxCutVertices) + " vertices");
  const auto w = unit_weights_if_empty(g, weights);
  std::vector<std::vector<std::pair<Vertex, int>>> adj(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto [u, v] = g.edges()[i];
    adj[static_cast<std::size_t>(u)].emplace_back(v, w[i]);
    adj[static_cast<std::size_t>(v)].emplace_back(u, w[i]);
  }
  CutResult best;
  best.side.assign(static_cast<std::size_t>(n), 0);
  if (n <= 1) return best;
  // Gray code over vertices 1..n-1; vertex 0 stays on side 0.
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::int64_t cut = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int v = std::countr_zero(i) + 1;
    auto& sv = side[static_cast<std::size_t>(v)];
    for (const auto& [u, weight] : adj[static_cast<std::size_t>(v)])
      cut += side[static_cast<std::size_t>(u)] == sv ? weight : -weight;
    sv ^= 1;
    if (cut > best.size) {
      best.size = cut;
      best.side = side;
    }
  }
  return best;
}

std::optional<std::vector<int>> proper_coloring(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (k < 1) throw InputError("coloring needs k >= 1");
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  int v = 0;
  while (v >= 0 && v < n) {
    auto& c = color[static_cast<std::size_t>(v)];
    bool placed = false;
    while (++c <= k) {
      bool clash = false;
      for (Vertex w : g.neighbors(v))
        if (w < v && color[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      if (!clash) {
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
    } else {
      c = 0;
      --v;
    }
  }
  if (v < 0) return std::nullopt;
  return color;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (int c : colors)
    if (c < 1 || c > k) return false;
  for (const auto& [u, v] : g.edges())
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) return false;
  return true;
}

}  // namespace sigmaforge
