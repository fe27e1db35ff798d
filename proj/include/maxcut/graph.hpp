#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcut {

/// Per-vertex shore labels; every entry is -1 or +1.
using CutAssignment = std::vector<std::int8_t>;

struct Edge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::int64_t w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable weighted undirected graph. Parallel edges are kept as distinct
/// entries; self-loops are rejected. Weights are exact integers and all cut
/// values are accumulated in 64-bit signed arithmetic. Safe to share across
/// threads once constructed.
class Graph {
 public:
  struct Incidence {
    std::uint32_t neighbor;
    std::int64_t weight;
  };

  Graph() = default;
  Graph(std::uint32_t num_vertices, std::vector<Edge> edges);

  std::uint32_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Incidence> neighbors(std::uint32_t v) const {
    return {adj_.data() + adj_offsets_[v], adj_.data() + adj_offsets_[v + 1]};
  }

  /// Number of incident edge ends of v (parallel edges counted).
  std::size_t degree(std::uint32_t v) const { return adj_offsets_[v + 1] - adj_offsets_[v]; }

 private:
  std::uint32_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> adj_offsets_{0};
  std::vector<Incidence> adj_;
};

/// Read a graph in the standard edge-list format: one header line "n m",
/// then m lines "a b w" with 1-based endpoints. Blank lines and trailing
/// whitespace are tolerated anywhere; anything else (comments included) is
/// an error. Endpoints are converted to 0-based. Self-loops are rejected.
Graph parse_graph(std::istream& in);

/// Write a graph in the same edge-list format (1-based endpoints).
void write_graph(const Graph& g, std::ostream& out);

/// Total weight of edges whose endpoints lie on different shores.
std::int64_t cut_value(const Graph& g, const CutAssignment& a);

/// One line of space-separated {-1,1} values, no trailing newline.
void write_assignment(const CutAssignment& a, std::ostream& out);

/// Inverse of write_assignment; rejects anything that is not -1 or 1.
CutAssignment parse_assignment(std::istream& in);

}  // namespace maxcut
