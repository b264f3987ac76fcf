#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graph_gen.hpp"
#include "oracles.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/solver.hpp"

using namespace sigmaforge;

namespace {

bool witness_ok(const Graph& g, Mode mode, const SolveResult& r) {
  if (!r.value) return !r.witness;
  if (!r.witness) return false;
  if (mode == Mode::lucky) return is_lucky_labeling(g, *r.witness);
  std::vector<int> parts(r.witness->label_of.begin(), r.witness->label_of.end());
  return is_sigma_coloring(g, VertexSetPartition(r.witness->k, parts));
}

}  // namespace

TEST(SigmaNumber, Examples) {
  EXPECT_EQ(sigma_number(families::path(3), 4).value, 1);
  EXPECT_EQ(sigma_number(families::complete(3), 4).value, 3);
  EXPECT_EQ(sigma_number(families::cycle(4), 4).value, 2);
}

TEST(LuckyNumber, Examples) {
  EXPECT_EQ(lucky_number(families::cycle(5), 4).value, 3);
  EXPECT_EQ(lucky_number(families::cycle(4), 4).value, 2);
  EXPECT_EQ(lucky_number(families::path(3), 4).value, 1);
}

TEST(SigmaNumber, CappedSearchIsExhaustedWithoutValue) {
  const auto r = sigma_number(families::complete(3), 2);
  EXPECT_FALSE(r.value);
  EXPECT_TRUE(r.exhausted);
}

TEST(SigmaNumber, BudgetExceeded) {
  const auto r = sigma_number(families::complete(12), 11, 50);
  EXPECT_FALSE(r.value);
  EXPECT_FALSE(r.exhausted);
}

TEST(SigmaNumber, DegenerateInputs) {
  for (const Graph& g : {Graph(0, {}), Graph(5, {})}) {
    const auto r = sigma_number(g, 3);
    EXPECT_EQ(r.value, 1);
    EXPECT_TRUE(r.witness);
    EXPECT_TRUE(r.exhausted);
  }
  EXPECT_THROW(sigma_number(families::path(2), 0), InputError);
}

TEST(DecideTwo, Examples) {
  for (Mode m : {Mode::sigma, Mode::lucky}) {
    const auto c3 = decide_two(families::cycle(3), m);
    EXPECT_FALSE(c3.value);
    EXPECT_TRUE(c3.exhausted);
    EXPECT_EQ(decide_two(families::cycle(4), m).value, 2);
    EXPECT_FALSE(decide_two(families::complete(4), m).value);
  }
}

TEST(MinPart, MatchesOracleOnExamples) {
  for (const Graph& g : {families::cycle(4), families::complete_bipartite(3, 3), families::cycle(6), families::petersen()}) {
    const auto r = min_part_size(g);
    ASSERT_TRUE(r.exhausted);
    EXPECT_EQ(r.min_size, testkit::naive_min_part(g));
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(is_sigma_coloring(g, *r.witness));
    EXPECT_EQ(std::min(r.witness->part_size(1), r.witness->part_size(2)), *r.min_size);
  }
  EXPECT_EQ(min_part_size(families::cycle(4)).min_size, 1);
  EXPECT_EQ(min_part_size(families::complete_bipartite(3, 3)).min_size, 1);
}

TEST(MinPart, MatchesOracleOnAllSmallGraphs) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : testkit::all_graphs(n)) {
      const auto oracle = testkit::naive_min_part(g);
      if (!oracle) {
        EXPECT_THROW(min_part_size(g), PromiseError);
        continue;
      }
      const auto r = min_part_size(g);
      EXPECT_TRUE(r.exhausted);
      EXPECT_EQ(r.min_size, oracle) << serialize_graph(g);
    }
}

TEST(MinPart, PromiseViolation) { EXPECT_THROW(min_part_size(families::complete(3)), PromiseError); }

TEST(MinPart, BudgetGivesBestSoFar) {
  const auto r = min_part_size(families::complete_bipartite(7, 7), 3);
  EXPECT_FALSE(r.exhausted);
  if (r.min_size) EXPECT_TRUE(is_sigma_coloring(families::complete_bipartite(7, 7), *r.witness));
}

TEST(RegularBridge, Examples) {
  EXPECT_TRUE(regular_sigma2_iff_eta2(families::cycle(5)));
  EXPECT_FALSE(decide_two(families::cycle(5), Mode::sigma).value);
  EXPECT_TRUE(regular_sigma2_iff_eta2(families::cycle(6)));
  EXPECT_EQ(decide_two(families::cycle(6), Mode::lucky).value, 2);
  EXPECT_TRUE(regular_sigma2_iff_eta2(families::petersen()));
  EXPECT_THROW(regular_sigma2_iff_eta2(families::path(3)), InputError);
}

TEST(RegularBridge, AllRegularUpToNine) {
  for (int n = 1; n <= 9; ++n)
    for (int d = 0; d < n; ++d)
      for (const auto& g : testkit::connected_regular_graphs(n, d)) EXPECT_TRUE(regular_sigma2_iff_eta2(g));
}

TEST(Oracle, AllGraphsUpToSeven) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : testkit::all_graphs(n)) {
      const auto s = sigma_number(g, n);
      const auto l = lucky_number(g, n);
      EXPECT_EQ(s.value, testkit::naive_sigma_number(g, n)) << serialize_graph(g);
      EXPECT_EQ(l.value, testkit::naive_lucky_number(g, n)) << serialize_graph(g);
      EXPECT_TRUE(witness_ok(g, Mode::sigma, s));
      EXPECT_TRUE(witness_ok(g, Mode::lucky, l));
    }
}

TEST(Oracle, RandomUpToSixteen) {
  std::mt19937_64 rng(97);
  for (int i = 0; i < 30; ++i) {
    const int n = 10 + static_cast<int>(rng() % 7);
    const Graph g = testkit::random_graph(n, 0.25, rng);
    EXPECT_EQ(sigma_number(g, n).value, testkit::naive_sigma_number(g, n)) << serialize_graph(g);
  }
}

TEST(Invariance, PermutationKeepsValues) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testkit::random_graph(9, 0.4, rng);
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = testkit::permute(g, perm);
    EXPECT_EQ(sigma_number(g, 9).value, sigma_number(h, 9).value);
    EXPECT_EQ(lucky_number(g, 9).value, lucky_number(h, 9).value);
  }
}

TEST(Invariance, RolesDoNotMatter) {
  GraphBuilder b;
  for (int i = 0; i < 5; ++i) b.add_vertex("tag:" + std::to_string(i));
  for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
  const Graph tagged = b.build();
  EXPECT_EQ(lucky_number(tagged, 4).value, lucky_number(tagged.without_roles(), 4).value);
  EXPECT_EQ(lucky_number(tagged, 4).nodes, lucky_number(tagged.without_roles(), 4).nodes);
}

TEST(Monotonicity, SigmaAtMostChromatic) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 60; ++i) {
    const int n = 6 + static_cast<int>(rng() % 7);
    const Graph g = testkit::random_graph(n, 0.5, rng);
    const int chi = testkit::chromatic_number(g);
    const auto s = sigma_number(g, chi);
    EXPECT_TRUE(s.value.has_value());
  }
}

TEST(Json, Envelope) {
  const auto r = sigma_number(families::cycle(4), 3);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("value"), 2);
  EXPECT_EQ(j.at("exhausted"), true);
  EXPECT_TRUE(j.at("nodes").is_number_unsigned());
  EXPECT_EQ(j.at("witness").at("k"), 2);
  EXPECT_EQ(j.at("witness").at("labels").size(), 4u);
  const auto none = to_json(sigma_number(families::complete(3), 2));
  EXPECT_TRUE(none.at("value").is_null());
  EXPECT_TRUE(none.at("witness").is_null());
}

TEST(Json, LabelingRoundTrip) {
  const Labeling lab{3, {1, 3, 2}};
  EXPECT_EQ(labeling_from_json(labeling_json(lab)), lab);
  EXPECT_THROW(labeling_from_json(nlohmann::json{{"k", 2}, {"labels", {1, 3}}}), InputError);
}
