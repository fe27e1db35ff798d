#include "maxcut/graph.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

namespace maxcut {

Graph::Graph(std::uint32_t num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u >= n_ || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop");
  }
  adj_offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++adj_offsets_[e.u + 1];
    ++adj_offsets_[e.v + 1];
  }
  for (std::uint32_t v = 0; v < n_; ++v) adj_offsets_[v + 1] += adj_offsets_[v];
  adj_.resize(2 * edges_.size());
  std::vector<std::size_t> fill(adj_offsets_.begin(), adj_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = {e.v, e.w};
    adj_[fill[e.v]++] = {e.u, e.w};
  }
}

namespace {

// Splits a line into whitespace-separated tokens; empty result for blank lines.
std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "malformed integer '" + std::string(tok) + "'");
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  std::int64_t n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(line_no, "header must be 'n m'");
    n = parse_int(tok[0], line_no);
    m = parse_int(tok[1], line_no);
    if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
    break;
  }
  if (n < 0) throw ParseError(line_no + 1, "missing header line");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    if (static_cast<std::int64_t>(edges.size()) == m)
      throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
    if (tok.size() != 3) throw ParseError(line_no, "edge line must be 'a b w'");
    std::int64_t a = parse_int(tok[0], line_no);
    std::int64_t b = parse_int(tok[1], line_no);
    std::int64_t w = parse_int(tok[2], line_no);
    if (a < 1 || a > n || b < 1 || b > n)
      throw ParseError(line_no, "endpoint out of range [1," + std::to_string(n) + "]");
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    edges.push_back({static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1), w});
  }
  if (static_cast<std::int64_t>(edges.size()) != m)
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, got " +
                                      std::to_string(edges.size()));
  return Graph(static_cast<std::uint32_t>(n), std::move(edges));
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

std::int64_t cut_value(const Graph& g, const CutAssignment& a) {
  if (a.size() != g.num_vertices()) throw std::invalid_argument("assignment length mismatch");
  std::int64_t total = 0;
  for (const Edge& e : g.edges())
    if (a[e.u] != a[e.v]) total += e.w;
  return total;
}

void write_assignment(const CutAssignment& a, std::ostream& out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ' ';
    out << static_cast<int>(a[i]);
  }
}

CutAssignment parse_assignment(std::istream& in) {
  CutAssignment a;
  std::int64_t v = 0;
  while (in >> v) {
    if (v != -1 && v != 1) throw std::invalid_argument("assignment entries must be -1 or 1");
    a.push_back(static_cast<std::int8_t>(v));
  }
  if (!in.eof() && in.fail()) throw std::invalid_argument("malformed assignment token");
  return a;
}

}  // namespace maxcut
