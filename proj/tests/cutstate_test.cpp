#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "maxcut/cut_state.hpp"
#include "maxcut/graph.hpp"
#include "test_util.hpp"

using maxcut::CutAssignment;
using maxcut::CutState;
using maxcut::Graph;

TEST_CASE("initial state: everything on shore +1") {
  Graph g(3, {{0, 1, 5}, {0, 1, -2}, {1, 2, 7}});
  CutState s(g);
  CHECK(s.objective() == 0);
  CHECK(s.assignment() == CutAssignment{1, 1, 1});
  // Gain of v from the all-ones state is the total weight incident to v.
  CHECK(s.gain(0) == 3);
  CHECK(s.gain(1) == 10);
  CHECK(s.gain(2) == 7);
}

TEST_CASE("recompute matches direct evaluation") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    Graph g = testutil::random_graph(rng, 2 + rep % 17, 0.5, -10, 10);
    CutAssignment a = testutil::random_assignment(rng, g.num_vertices());
    CutState s = CutState::recompute(g, a);
    CHECK(s.assignment() == a);
    CHECK(s.objective() == maxcut::cut_value(g, a));
    // Each gain must equal the objective change of actually flipping.
    for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
      CutAssignment flipped = a;
      flipped[v] = static_cast<std::int8_t>(-flipped[v]);
      CHECK(s.gain(v) == maxcut::cut_value(g, flipped) - s.objective());
    }
  }
}

TEST_CASE("recompute validates its input") {
  Graph g(2, {{0, 1, 1}});
  CHECK_THROWS_AS(CutState::recompute(g, {1}), std::invalid_argument);
  CHECK_THROWS_AS(CutState::recompute(g, {1, 0}), std::invalid_argument);
}

TEST_CASE("flip keeps objective and gains exactly in sync") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = testutil::random_graph(rng, 2 + rep, 0.4, -10, 10);
    CutState s(g);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.num_vertices() - 1);
    for (int step = 0; step < 200; ++step) {
      const std::uint32_t v = pick(rng);
      const std::int64_t predicted = s.objective() + s.gain(v);
      s.flip(v);
      CHECK(s.objective() == predicted);
      CHECK(s.objective() == maxcut::cut_value(g, s.assignment()));
    }
    // Full-state agreement with a from-scratch rebuild at the end.
    CHECK(s == CutState::recompute(g, s.assignment()));
  }
}

TEST_CASE("flip is its own inverse") {
  std::mt19937_64 rng(13);
  Graph g = testutil::random_graph(rng, 12, 0.5, -5, 5);
  CutState s = CutState::recompute(g, testutil::random_assignment(rng, 12));
  const CutState before = s;
  for (std::uint32_t v = 0; v < 12; ++v) {
    s.flip(v);
    s.flip(v);
    CHECK(s == before);
  }
}

TEST_CASE("flipping a vertex negates its own gain") {
  std::mt19937_64 rng(14);
  Graph g = testutil::random_graph(rng, 9, 0.6, -8, 8);
  CutState s(g);
  for (std::uint32_t v = 0; v < 9; ++v) {
    const std::int64_t gain = s.gain(v);
    s.flip(v);
    CHECK(s.gain(v) == -gain);
  }
}
