#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signelim/graph.hpp"

namespace signelim {

// An ordering stored as the vertex sequence in increasing position order:
// sequence[i] is the vertex at 1-based position i + 1.
struct Ordering {
  std::vector<VertexId> sequence;

  std::size_t size() const noexcept { return sequence.size(); }
  // Inverse map: positions()[v] is the 0-based position of v.
  std::vector<int> positions() const;
  // Throws GraphError unless this is a permutation of 0..n-1.
  void validate(int n) const;

  static Ordering identity(int n);

  friend bool operator==(const Ordering&, const Ordering&) = default;
  friend auto operator<=>(const Ordering&, const Ordering&) = default;
};

std::string format_ordering(const Ordering& nu);
Ordering parse_ordering(std::string_view text);

enum class SeoRule { E1, E2 };

// A triple (u, v, w) with u and v placed before w that breaks one rule:
//   E1: u ~s w ~s v but not u ~s v
//   E2: u ~s v ~(-s) w but not u ~s w
struct SeoViolation {
  SeoRule rule;
  VertexId u;
  VertexId v;
  VertexId w;
  Sign sign;

  friend bool operator==(const SeoViolation&, const SeoViolation&) = default;
};

std::string format_violation(const SeoViolation& v);

// Returns nullopt if nu is a signed elimination ordering of g, otherwise the
// first violation in scan order: increasing position of w, then of u, then
// of v; E1 before E2; plus before minus. Throws GraphError if nu is not a
// permutation of the vertex set.
std::optional<SeoViolation> is_seo(const SignedGraph& g, const Ordering& nu);
// Every violation, in the same scan order.
std::vector<SeoViolation> all_seo_violations(const SignedGraph& g, const Ordering& nu);

// Median form of the same test. Pair weights are +1, -1 and 0 for plus,
// minus and absent; for each triple with w last the middle of the three
// weights must equal weight(uv) unless w is adjacent to neither u nor v.
bool is_seo_via_weights(const SignedGraph& g, const Ordering& nu);

enum class SimplicialRule { S1, S2 };

// S1: a, b are non-adjacent (in sign `sign`) members of N_sign(vertex).
// S2: a ~(-sign) b ~sign vertex but not a ~(-sign) vertex.
struct SimplicialViolation {
  SimplicialRule rule;
  Sign sign;
  VertexId a;
  VertexId b;

  friend bool operator==(const SimplicialViolation&, const SimplicialViolation&) = default;
};

// nullopt when v is signed-simplicial. Violations are reported S1 before S2,
// plus before minus, then by (a, b) ascending.
std::optional<SimplicialViolation> is_signed_simplicial(const SignedGraph& g, VertexId v);
VertexSet signed_simplicial_set(const SignedGraph& g);

// Peels the lowest-indexed signed-simplicial vertex into the highest free
// position until the graph is exhausted. nullopt when some residual graph has
// no signed-simplicial vertex, i.e. g is not signed-eliminable.
std::optional<Ordering> greedy_seo(const SignedGraph& g);

inline bool is_signed_eliminable(const SignedGraph& g) { return greedy_seo(g).has_value(); }

// Streams every SEO of a graph, in lexicographic order of the sequence. A
// sequence is extended only while each newly appended vertex is
// signed-simplicial in the subgraph induced by the prefix.
class SeoEnumerator {
 public:
  static constexpr int kDefaultCap = 8;

  explicit SeoEnumerator(SignedGraph g, int cap = kDefaultCap);

  std::optional<Ordering> next();
  void restart();

 private:
  bool extendable(VertexId candidate) const;

  SignedGraph g_;
  std::vector<VertexId> prefix_;
  std::vector<bool> used_;
  // Next candidate to try at each depth.
  std::vector<VertexId> cursor_;
  bool done_ = false;
};

std::vector<Ordering> enumerate_seos(const SignedGraph& g, int cap = SeoEnumerator::kDefaultCap);

}  // namespace signelim
