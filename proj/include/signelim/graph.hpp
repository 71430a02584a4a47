#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace signelim {

using VertexId = int;
using VertexSet = std::vector<VertexId>;  // sorted ascending, no duplicates

enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

// Both signs in the fixed scan order used throughout the library.
inline constexpr Sign kSigns[2] = {Sign::plus, Sign::minus};

// State of an unordered vertex pair. The numeric value doubles as the
// +1 / -1 / 0 edge weight.
enum class EdgeState : std::int8_t { absent = 0, plus = 1, minus = -1 };

constexpr EdgeState edge_state(Sign s) noexcept { return static_cast<EdgeState>(s); }
constexpr int weight(EdgeState e) noexcept { return static_cast<int>(e); }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A size cap on an exponential-time routine was exceeded.
class CapError : public GraphError {
 public:
  using GraphError::GraphError;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct SignedEdge {
  VertexId u;
  VertexId v;
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

class UnsignedGraph {
 public:
  UnsignedGraph() = default;
  explicit UnsignedGraph(int n);

  int size() const noexcept { return n_; }
  bool adjacent(VertexId u, VertexId v) const;
  void add_edge(VertexId u, VertexId v);
  // Open neighborhood, ascending.
  VertexSet neighbors(VertexId v) const;
  int degree(VertexId v) const;
  std::size_t edge_count() const;
  UnsignedGraph induced(const VertexSet& keep) const;

  friend bool operator==(const UnsignedGraph&, const UnsignedGraph&) = default;

 private:
  void check(VertexId v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Immutable simple graph whose edges carry a sign. Pairs are stored in a
// dense symmetric matrix, which suits the desk-scale sizes this library is
// meant for.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Throws GraphError on self-loops, duplicate pairs and out-of-range ids.
  static SignedGraph from_edges(int n, const std::vector<SignedEdge>& edges);
  static SignedGraph edgeless(int n);

  int size() const noexcept { return n_; }

  EdgeState edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return edge(u, v) != EdgeState::absent; }
  bool adjacent(VertexId u, VertexId v, Sign s) const { return edge(u, v) == edge_state(s); }

  // Canonical edge list: u < v, sorted by (u, v).
  std::vector<SignedEdge> edges() const;
  std::size_t edge_count(Sign s) const;
  std::size_t edge_count() const;

  // N_s(v), or N_s[v] when closed is set.
  VertexSet neighborhood(VertexId v, Sign s, bool closed = false) const;
  // Neighbors of either sign.
  VertexSet neighbors(VertexId v) const;
  int degree(VertexId v, Sign s) const;

  UnsignedGraph sign_restriction(Sign s) const;
  // Underlying graph with signs dropped.
  UnsignedGraph underlying() const;

  // Induced subgraph on `keep`, relabeled order-preservingly. The second
  // element maps old ids to new ids (-1 for dropped vertices).
  std::pair<SignedGraph, std::vector<VertexId>> induced_subgraph(VertexSet keep) const;
  SignedGraph flipped() const;
  // Relabels vertex v as perm[v].
  SignedGraph relabeled(const std::vector<VertexId>& perm) const;
  // Disjoint union: other's vertices are appended after this graph's.
  SignedGraph disjoint_union(const SignedGraph& other) const;
  SignedGraph with_edge(VertexId u, VertexId v, Sign s) const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  explicit SignedGraph(int n);
  void check(VertexId v) const;
  std::size_t slot(VertexId u, VertexId v) const noexcept {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void set(VertexId u, VertexId v, EdgeState e);

  int n_ = 0;
  std::vector<EdgeState> cells_;
};

// Maximal vertex sets connected by edges of either sign, each sorted, listed
// by smallest member.
std::vector<VertexSet> connected_components(const SignedGraph& g);

// Streams every labeled signed graph on n vertices exactly once. Pairs are
// ordered lexicographically, (0,1), (0,2), ..., (n-2,n-1); each pair cycles
// absent < plus < minus, and the last pair turns fastest like an odometer.
class SignedGraphEnumerator {
 public:
  static constexpr int kDefaultCap = 6;

  explicit SignedGraphEnumerator(int n, int cap = kDefaultCap);

  std::uint64_t count() const noexcept { return total_; }
  // Graph at a given position of the stream; independent of the cursor.
  SignedGraph at(std::uint64_t index) const;
  std::optional<SignedGraph> next();
  void restart() noexcept { cursor_ = 0; }

 private:
  int n_;
  std::vector<std::pair<VertexId, VertexId>> pairs_;
  std::uint64_t total_ = 1;
  std::uint64_t cursor_ = 0;
};

std::uint64_t signed_graph_count(int n);

SignedGraph parse_sg(std::string_view text);
std::string serialize_sg(const SignedGraph& g);

}  // namespace signelim
