#pragma once

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "signelim/graph.hpp"
#include "signelim/seo.hpp"

namespace signelim {

// ---------------------------------------------------------------------------
// Unsigned chordality

struct ChordalityResult {
  // Perfect elimination ordering (earlier neighbors of each vertex form a
  // clique) when the graph is chordal.
  std::optional<Ordering> elimination;
  // Otherwise an induced cycle of length >= 4, in traversal order.
  std::vector<VertexId> cycle;

  bool chordal() const noexcept { return elimination.has_value(); }
};

// Maximum cardinality search (ties to the lowest id) followed by a
// verification pass. On failure the cycle is recovered from the first
// vertex whose earlier neighborhood is not a clique.
ChordalityResult chordality_check(const UnsignedGraph& h);

// ---------------------------------------------------------------------------
// Certificates of non-eliminability

struct ChordlessCycle {
  Sign sign;
  std::vector<VertexId> cycle;
  friend bool operator==(const ChordlessCycle&, const ChordlessCycle&) = default;
};

// u ~s v ~(-s) w ~s x on distinct vertices without the closing edges
// required of a signed-eliminable graph.
struct AltPathViolation {
  Sign sign;
  VertexId u, v, w, x;
  friend bool operator==(const AltPathViolation&, const AltPathViolation&) = default;
};

// (-s)-path v_1..v_n, n >= 3, with apex w s-adjacent to exactly v_2..v_{n-1}.
struct Mountain {
  Sign sign;
  std::vector<VertexId> path;
  VertexId apex;
  friend bool operator==(const Mountain&, const Mountain&) = default;
};

// (-s)-path v_1..v_n, n >= 2, with an s-edge w_1 w_2 where w_1 is
// s-adjacent to v_1..v_{n-1} and w_2 to v_2..v_n.
struct Hill {
  Sign sign;
  std::vector<VertexId> path;
  VertexId apex1, apex2;
  friend bool operator==(const Hill&, const Hill&) = default;
};

using Certificate = std::variant<ChordlessCycle, AltPathViolation, Mountain, Hill>;

std::string format_certificate(const Certificate& c);
// Inverse of format_certificate. Throws GraphError on malformed lines.
Certificate parse_certificate(std::string_view line);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const noexcept { return ok; }
};

// Re-checks a certificate against g from adjacency queries alone.
CertificateCheck verify_certificate(const SignedGraph& g, const Certificate& c);

// ---------------------------------------------------------------------------
// Conditions

struct SearchOptions {
  static constexpr int kDefaultCap = 12;
  int cap = kDefaultCap;
  bool override_cap = false;
  // Restricts mountain/hill searches to these path lengths (inclusive).
  int min_path = 0;
  int max_path = INT_MAX;
};

// Both sign restrictions chordal; the plus side is checked first.
std::optional<ChordlessCycle> check_c1(const SignedGraph& g);
std::optional<ChordlessCycle> check_c1(const SignedGraph& g, Sign s);

// Scans (sign, u, v, w, x) lexicographically for u ~s v ~(-s) w ~s x on
// distinct vertices where neither (u ~s w and u ~s x) nor (u ~s x and
// x ~s v) holds.
std::optional<AltPathViolation> check_c2(const SignedGraph& g);

// Induced-subgraph searches by backtracking over induced (-s)-paths. Both
// throw CapError when g has more than opts.cap vertices, unless overridden.
std::optional<Mountain> find_mountain(const SignedGraph& g, const SearchOptions& opts = {});
std::optional<Hill> find_hill(const SignedGraph& g, const SearchOptions& opts = {});

struct Verdict {
  bool c1_plus = false;
  bool c1_minus = false;
  bool c2 = false;
  bool c3 = false;
  // Exactly one of these is set in a consistent verdict.
  std::optional<Ordering> ordering;
  std::optional<Certificate> certificate;
  // One certificate per failed check, in evaluation order; the first one is
  // `certificate`.
  std::vector<Certificate> witnesses;

  bool conditions_hold() const noexcept { return c1_plus && c1_minus && c2 && c3; }
  bool se() const noexcept { return ordering.has_value(); }
};

// Evaluates every condition; the reported certificate is the first failure
// in the order C1(+), C1(-), C2, mountain, hill. When all hold, the greedy
// ordering is attached.
Verdict characterize(const SignedGraph& g, const SearchOptions& opts = {});

std::string format_flags(const Verdict& v);  // "c1+=y c1-=y c2=y c3=y"

}  // namespace signelim
