#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "maxcut/graph.hpp"
#include "test_util.hpp"

using maxcut::CutAssignment;
using maxcut::Edge;
using maxcut::Graph;
using maxcut::ParseError;

TEST_CASE("adjacency covers every edge end, parallel edges included") {
  // Two parallel 0-1 edges with different weights plus a 1-2 edge.
  Graph g(3, {{0, 1, 5}, {0, 1, -2}, {1, 2, 7}});
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.degree(2) == 1);

  std::int64_t w0 = 0;
  for (const auto& inc : g.neighbors(0)) {
    CHECK(inc.neighbor == 1);
    w0 += inc.weight;
  }
  CHECK(w0 == 3);

  std::int64_t w1 = 0;
  for (const auto& inc : g.neighbors(1)) w1 += inc.weight;
  CHECK(w1 == 10);
  CHECK(g.neighbors(2).size() == 1);
  CHECK(g.neighbors(2)[0].neighbor == 1);
  CHECK(g.neighbors(2)[0].weight == 7);
}

TEST_CASE("constructor rejects bad edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("empty and edgeless graphs are fine") {
  Graph empty;
  CHECK(empty.num_vertices() == 0);
  CHECK(empty.num_edges() == 0);

  Graph lonely(4, {});
  CHECK(lonely.num_vertices() == 4);
  for (std::uint32_t v = 0; v < 4; ++v) CHECK(lonely.degree(v) == 0);
}

TEST_CASE("parse_graph reads the plain edge-list format") {
  std::istringstream in("3 2\n1 2 5\n2 3 -4\n");
  Graph g = maxcut::parse_graph(in);
  CHECK(g.num_vertices() == 3);
  REQUIRE(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge{0, 1, 5});
  CHECK(g.edges()[1] == Edge{1, 2, -4});
}

TEST_CASE("parse_graph tolerates blank lines, CRLF and stray spaces") {
  std::istringstream in("\n  \n3 2\r\n 1   2\t5 \r\n\n2 3 -4\n\n");
  Graph g = maxcut::parse_graph(in);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("parse_graph errors carry 1-based line numbers") {
  auto expect_error = [](const char* text, std::size_t line) {
    std::istringstream in(text);
    try {
      maxcut::parse_graph(in);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };

  expect_error("", 1);                          // missing header
  expect_error("3\n", 1);                       // header arity
  expect_error("3 2 9\n", 1);                   // header arity
  expect_error("x 2\n", 1);                     // header not a number
  expect_error("-1 2\n", 1);                    // negative count
  expect_error("# comment\n3 1\n1 2 1\n", 1);   // comments are not tolerated
  expect_error("3 2\n1 2\n", 2);                // edge arity
  expect_error("3 2\n1 2 1.5\n", 2);            // weight not an integer
  expect_error("3 2\n0 2 1\n", 2);              // endpoint below 1
  expect_error("3 2\n1 4 1\n", 2);              // endpoint above n
  expect_error("3 2\n2 2 1\n", 2);              // self-loop
  expect_error("3 1\n1 2 1\n2 3 1\n", 3);       // more edges than declared
  expect_error("3 2\n1 2 1\n", 3);              // fewer edges than declared
}

TEST_CASE("write_graph then parse_graph round-trips") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    Graph g = testutil::random_graph(rng, 1 + rep, 0.4, -9, 9);
    std::ostringstream out;
    maxcut::write_graph(g, out);
    std::istringstream in(out.str());
    Graph back = maxcut::parse_graph(in);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
  }
}

TEST_CASE("cut_value counts crossing edges only, parallel edges separately") {
  Graph g(3, {{0, 1, 5}, {0, 1, -2}, {1, 2, 7}});
  CHECK(maxcut::cut_value(g, {1, 1, 1}) == 0);
  CHECK(maxcut::cut_value(g, {-1, 1, 1}) == 3);
  CHECK(maxcut::cut_value(g, {1, -1, 1}) == 10);
  CHECK(maxcut::cut_value(g, {1, 1, -1}) == 7);
  CHECK(maxcut::cut_value(g, {-1, -1, 1}) == 7);
  CHECK_THROWS_AS(maxcut::cut_value(g, {1, 1}), std::invalid_argument);
}

TEST_CASE("assignment serialization round-trips and validates") {
  CutAssignment a = {1, -1, -1, 1};
  std::ostringstream out;
  maxcut::write_assignment(a, out);
  CHECK(out.str() == "1 -1 -1 1");

  std::istringstream in(out.str());
  CHECK(maxcut::parse_assignment(in) == a);

  std::istringstream bad("1 0 1");
  CHECK_THROWS_AS(maxcut::parse_assignment(bad), std::invalid_argument);
  std::istringstream junk("1 x");
  CHECK_THROWS_AS(maxcut::parse_assignment(junk), std::invalid_argument);
}
