#include <gtest/gtest.h>

#include <random>

#include "graph_gen.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/sat.hpp"

using namespace sigmaforge;

namespace {

Formula random_formula(int vars, int clauses, std::mt19937_64& rng) {
  Formula f;
  f.num_vars = vars;
  f.flavor = Flavor::nae;
  std::uniform_int_distribution<int> var(1, vars);
  for (int c = 0; c < clauses; ++c) {
    Clause cl{};
    for (auto& lit : cl) lit = var(rng) * (rng() % 2 ? 1 : -1);
    f.clauses.push_back(cl);
  }
  return f;
}

// Independent clause check, written out literally.
bool nae_by_hand(const Formula& f, const Assignment& a) {
  for (const auto& c : f.clauses) {
    bool any_true = false, any_false = false;
    for (Literal lit : c) {
      const bool v = a.value_of[static_cast<std::size_t>((lit > 0 ? lit : -lit) - 1)];
      ((lit > 0) == v ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) return false;
  }
  return true;
}

}  // namespace

TEST(Dimacs, Examples) {
  const auto f = parse_dimacs("p cnf 3 1\n1 2 3 0", Flavor::nae);
  EXPECT_EQ(f.num_vars, 3);
  EXPECT_EQ(f.clauses.size(), 1u);
  EXPECT_THROW(parse_dimacs("p cnf 3 1\n1 -2 3 0", Flavor::one_in_three), ParseError);
  EXPECT_NO_THROW(parse_dimacs("p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0", Flavor::one_in_three));
}

TEST(Dimacs, ErrorsNameTheLine) {
  const std::tuple<const char*, Flavor, std::size_t> cases[] = {
      {"c comment\np cnf 3 1\n1 2 0\n", Flavor::nae, 3},
      {"p cnf 3 1\n1 2 3 4 0\n", Flavor::nae, 2},
      {"p cnf 3 1\n1 2 4 0\n", Flavor::nae, 2},
      {"p cnf 3 2\n1 2 3 0\n1 2 3 0\n", Flavor::one_in_three, 3},
      {"p cnf 3 3\n1 2 3 0\n1 -2 3 0\n1 2 3 0\n", Flavor::one_in_three, 3},
      {"1 2 3 0\n", Flavor::nae, 1},
  };
  for (const auto& [text, flavor, line] : cases) {
    try {
      parse_dimacs(text, flavor);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
    }
  }
}

TEST(Dimacs, RoundTrip) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 30; ++i) {
    const auto f = random_formula(5, 4, rng);
    EXPECT_EQ(parse_dimacs(serialize_dimacs(f), Flavor::nae), f);
  }
}

TEST(Nae, Examples) {
  EXPECT_TRUE(nae_satisfiable(parse_dimacs("p cnf 3 1\n1 2 3 0", Flavor::nae)));
  EXPECT_FALSE(nae_satisfiable(parse_dimacs("p cnf 1 1\n1 1 1 0", Flavor::nae)));
  EXPECT_TRUE(nae_satisfiable(parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0", Flavor::nae)));
}

TEST(Nae, SymmetricUnderNegation) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_formula(4, 1 + static_cast<int>(rng() % 6), rng);
    const auto a = nae_satisfiable(f);
    const auto b = nae_satisfiable(negate_all(f));
    EXPECT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_TRUE(nae_by_hand(f, *a));
      EXPECT_TRUE(nae_holds(negate_all(f), complement(*a)));
    }
  }
}

TEST(Nae, TooManyVariables) {
  Formula f;
  f.num_vars = 26;
  f.flavor = Flavor::nae;
  f.clauses = {{1, 2, 26}};
  EXPECT_THROW(nae_satisfiable(f), BudgetError);
}

TEST(OneInThree, Examples) {
  const auto same = parse_dimacs("p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0", Flavor::one_in_three);
  const auto w = one_in_three_satisfiable(same);
  ASSERT_TRUE(w);
  EXPECT_EQ(static_cast<int>(w->value_of[0]) + w->value_of[1] + w->value_of[2], 1);
  // x occurs three times in one clause: all three literals agree
  EXPECT_FALSE(one_in_three_satisfiable(parse_dimacs("p cnf 1 1\n1 1 1 0", Flavor::plain)));
  const auto strict = parse_dimacs("p cnf 6 6\n1 2 3 0\n1 2 4 0\n1 5 6 0\n2 5 6 0\n3 4 5 0\n3 4 6 0", Flavor::one_in_three);
  EXPECT_FALSE(one_in_three_satisfiable(strict));
  EXPECT_TRUE(nae_satisfiable(strict));
}

TEST(OneInThree, WitnessesAreNaeWitnesses) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    auto f = random_formula(5, 4, rng);
    if (const auto a = one_in_three_satisfiable(f)) {
      EXPECT_TRUE(one_in_three_holds(f, *a));
      EXPECT_TRUE(nae_holds(f, *a));
    }
  }
}

TEST(MaxCut, Examples) {
  EXPECT_EQ(max_cut(families::complete(3)).size, 2);
  EXPECT_EQ(max_cut(families::cycle(4)).size, 4);
  EXPECT_EQ(max_cut(families::complete(4)).size, 4);
  EXPECT_EQ(max_cut(families::petersen()).size, 12);
}

TEST(MaxCut, ComplementedWitnessKeepsValue) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const Graph g = testkit::random_graph(10, 0.4, rng);
    const auto cut = max_cut(g);
    auto flipped = cut.side;
    for (auto& s : flipped) s ^= 1;
    EXPECT_EQ(cut_value(g, cut.side), cut.size);
    EXPECT_EQ(cut_value(g, flipped), cut.size);
  }
}

TEST(MaxCut, Weighted) {
  // path 0-1-2 with weights 2,1: the full cut is 3
  EXPECT_EQ(max_cut(families::path(3), {2, 1}).size, 3);
  EXPECT_THROW(max_cut(families::path(3), {1}), InputError);
  EXPECT_THROW(max_cut(Graph(25, {})), BudgetError);
}

TEST(Coloring, ProperColoring) {
  EXPECT_FALSE(proper_coloring(families::cycle(5), 2));
  const auto c = proper_coloring(families::cycle(5), 3);
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_proper_coloring(families::cycle(5), *c, 3));
  EXPECT_FALSE(is_proper_coloring(families::cycle(4), {1, 1, 2, 2}, 2));
}
