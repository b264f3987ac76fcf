#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sigmaforge/graph.hpp"

namespace sigmaforge {

enum class Flavor { nae, one_in_three, plain };

const char* flavor_name(Flavor f);
/// Accepts "nae", "1in3" / "one_in_three", "plain".
Flavor parse_flavor(std::string_view text);

/// Signed 1-based variable id; negative means negated.
using Literal = int;
using Clause = std::array<Literal, 3>;

struct Formula {
  int num_vars = 0;
  std::vector<Clause> clauses;
  Flavor flavor = Flavor::plain;

  bool operator==(const Formula&) const = default;
};

/// Throws InputError when arity, id range or flavor rules are broken.
void validate(const Formula& f);

/// "p cnf V C" header, clause lines of three nonzero ints ending in 0, "c" comments.
Formula parse_dimacs(std::string_view text, Flavor flavor);
std::string serialize_dimacs(const Formula& f);
Formula read_dimacs_file(const std::string& path, Flavor flavor);

struct Assignment {
  std::vector<bool> value_of;  ///< index i holds variable i+1

  bool operator==(const Assignment&) const = default;
  bool literal(Literal lit) const;
};

/// Every clause holds at least one true and one false literal.
bool nae_holds(const Formula& f, const Assignment& a);
/// Every clause holds exactly one true literal.
bool one_in_three_holds(const Formula& f, const Assignment& a);

inline constexpr int kMaxOracleVars = 25;
inline constexpr int kMaxCutVertices = 24;

/// Exhaustive over 2^n assignments, lowest mask first. BudgetError above 25 variables.
std::optional<Assignment> nae_satisfiable(const Formula& f);
std::optional<Assignment> one_in_three_satisfiable(const Formula& f);

/// Every literal flipped.
Formula negate_all(const Formula& f);
Assignment complement(const Assignment& a);

struct CutResult {
  std::int64_t size = 0;
  std::vector<int> side;  ///< 0 or 1 per vertex
};

/// Exhaustive maximum cut. `weights` follows g.edges() order; empty means unit.
CutResult max_cut(const Graph& g, const std::vector<int>& weights = {});
std::int64_t cut_value(const Graph& g, const std::vector<int>& side, const std::vector<int>& weights = {});

/// Backtracking proper k-coloring in id order; colors are 1..k.
std::optional<std::vector<int>> proper_coloring(const Graph& g, int k);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k);

}  // namespace sigmaforge
