#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "maxcut/graph.hpp"
#include "maxcut/oracle.hpp"
#include "test_util.hpp"

using maxcut::CutAssignment;
using maxcut::ExactResult;
using maxcut::Graph;

namespace {

// Independent reference: plain bitmask enumeration with vertex 0 fixed on
// shore +1, tracking the lexicographically smallest witness (-1 before +1).
ExactResult reference_maxcut(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  if (n == 0) return {0, {}};
  ExactResult best{std::numeric_limits<std::int64_t>::min(), {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    CutAssignment a(n, 1);
    for (std::uint32_t v = 1; v < n; ++v) {
      if ((mask >> (v - 1)) & 1) a[v] = -1;
    }
    const std::int64_t value = maxcut::cut_value(g, a);
    if (value > best.optimum ||
        (value == best.optimum && std::lexicographical_compare(a.begin(), a.end(),
                                                               best.witness.begin(),
                                                               best.witness.end()))) {
      best = {value, a};
    }
  }
  return best;
}

}  // namespace

TEST_CASE("known tiny optima") {
  // Path on 3 vertices, unit weights: cut both edges.
  Graph path(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(maxcut::brute_force_maxcut(path).optimum == 2);

  // Triangle: any bipartition cuts exactly 2 of the 3 edges.
  Graph triangle(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
  CHECK(maxcut::brute_force_maxcut(triangle).optimum == 2);

  // K4: best split is 2+2, cutting 4 edges.
  Graph k4(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(maxcut::brute_force_maxcut(k4).optimum == 4);

  // A single negative edge is never worth cutting.
  Graph neg(2, {{0, 1, -5}});
  ExactResult r = maxcut::brute_force_maxcut(neg);
  CHECK(r.optimum == 0);
  CHECK(maxcut::cut_value(neg, r.witness) == 0);
}

TEST_CASE("degenerate sizes") {
  CHECK(maxcut::brute_force_maxcut(Graph()).optimum == 0);
  CHECK(maxcut::brute_force_maxcut(Graph()).witness.empty());

  ExactResult one = maxcut::brute_force_maxcut(Graph(1, {}));
  CHECK(one.optimum == 0);
  CHECK(one.witness == CutAssignment{1});
}

TEST_CASE("size limit") {
  CHECK_THROWS_AS(maxcut::brute_force_maxcut(Graph(25, {})), std::invalid_argument);
}

TEST_CASE("witness evaluates to the optimum and fixes vertex 0 on +1") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g = testutil::random_graph(rng, 2 + rep % 11, 0.5, -10, 10);
    ExactResult r = maxcut::brute_force_maxcut(g);
    REQUIRE(r.witness.size() == g.num_vertices());
    CHECK(r.witness[0] == 1);
    CHECK(maxcut::cut_value(g, r.witness) == r.optimum);
  }
}

TEST_CASE("agrees with an independent enumeration, witness included") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 40; ++rep) {
    Graph g = testutil::random_graph(rng, 1 + rep % 12, 0.45, -7, 7);
    ExactResult got = maxcut::brute_force_maxcut(g);
    ExactResult want = reference_maxcut(g);
    CHECK(got.optimum == want.optimum);
    CHECK(got.witness == want.witness);
  }
}

TEST_CASE("single-flip enumeration matches naive evaluation on 100 ten-vertex graphs") {
  // The production solver walks assignments by single flips with incremental
  // gains; the reference re-scores every assignment from scratch.
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    Graph g = testutil::random_graph(rng, 10, 0.4, -9, 9);
    ExactResult got = maxcut::brute_force_maxcut(g);
    ExactResult want = reference_maxcut(g);
    CHECK(got.optimum == want.optimum);
    CHECK(got.witness == want.witness);
  }
}

TEST_CASE("tie-break picks the lexicographically smallest witness") {
  // No edges: every assignment cuts 0, so the witness must be the smallest
  // assignment with vertex 0 on +1, i.e. everything else on -1.
  ExactResult r = maxcut::brute_force_maxcut(Graph(3, {}));
  CHECK(r.optimum == 0);
  CHECK(r.witness == CutAssignment{1, -1, -1});
}
