#pragma once
// Shared fixtures and brute-force reference checks for the test suites.
// The reference checks read the definitions directly off pair states and do
// not call into the library's algorithms.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <vector>

#include "signelim/graph.hpp"
#include "signelim/seo.hpp"

namespace signelim::testing {

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

// v1 ~+ v2 ~+ v4 and v3 ~- v4, with v_i = i - 1.
inline SignedGraph g_ex() { return SignedGraph::from_edges(4, {{0, 1, P}, {1, 3, P}, {2, 3, M}}); }

// Plus-mountain (v1, v2, v3; w) = (0, 1, 2; 3).
inline SignedGraph m3() { return SignedGraph::from_edges(4, {{0, 1, M}, {1, 2, M}, {3, 1, P}}); }

// m3 plus w ~+ v3.
inline SignedGraph cm3() { return m3().with_edge(3, 2, P); }

inline SignedGraph p4alt() { return SignedGraph::from_edges(4, {{0, 1, P}, {1, 2, M}, {2, 3, P}}); }

// Plus-hill (v1, v2; w1, w2) = (0, 1; 2, 3) plus w1 ~+ v2.
inline SignedGraph ch2() {
  return SignedGraph::from_edges(4, {{0, 1, M}, {2, 3, P}, {2, 0, P}, {3, 1, P}, {2, 1, P}});
}

inline SignedGraph c4(Sign a, Sign b, Sign c, Sign d) {
  return SignedGraph::from_edges(4, {{0, 1, a}, {1, 2, b}, {2, 3, c}, {3, 0, d}});
}

inline SignedGraph complete(int n, const std::vector<SignedEdge>& minus_edges) {
  std::vector<SignedEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const bool minus = std::any_of(minus_edges.begin(), minus_edges.end(), [&](const SignedEdge& e) {
        return (e.u == u && e.v == v) || (e.u == v && e.v == u);
      });
      edges.push_back({u, v, minus ? M : P});
    }
  }
  return SignedGraph::from_edges(n, edges);
}

// ---------------------------------------------------------------------------
// Reference checks

inline bool has(const SignedGraph& g, VertexId a, VertexId b, Sign s) {
  return g.edge(a, b) == edge_state(s);
}

inline bool naive_is_seo(const SignedGraph& g, const std::vector<VertexId>& seq) {
  const std::size_t n = seq.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const VertexId u = seq[i], v = seq[j], w = seq[k];
        for (Sign s : {P, M}) {
          if (has(g, u, w, s) && has(g, w, v, s) && !has(g, u, v, s)) return false;
          if (has(g, u, v, s) && has(g, v, w, -s) && !has(g, u, w, s)) return false;
        }
      }
    }
  }
  return true;
}

inline std::vector<Ordering> naive_all_seos(const SignedGraph& g) {
  std::vector<Ordering> out;
  std::vector<VertexId> seq(static_cast<std::size_t>(g.size()));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    if (naive_is_seo(g, seq)) out.push_back(Ordering{seq});
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

inline bool naive_se(const SignedGraph& g) {
  std::vector<VertexId> seq(static_cast<std::size_t>(g.size()));
  std::iota(seq.begin(), seq.end(), 0);
  do {
    if (naive_is_seo(g, seq)) return true;
  } while (std::next_permutation(seq.begin(), seq.end()));
  return false;
}

// Visits every subset of 0..n-1 as a sorted vector.
inline void for_each_subset(int n, const std::function<void(const std::vector<VertexId>&)>& visit) {
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    visit(s);
  }
}

// Chordal iff no vertex subset of size >= 4 induces a connected 2-regular
// graph.
inline bool naive_chordal(const UnsignedGraph& h) {
  bool chordal = true;
  for_each_subset(h.size(), [&](const std::vector<VertexId>& s) {
    if (!chordal || s.size() < 4) return;
    for (VertexId a : s) {
      int deg = 0;
      for (VertexId b : s) deg += (a != b && h.adjacent(a, b));
      if (deg != 2) return;
    }
    std::vector<VertexId> seen{s[0]};
    for (std::size_t i = 0; i < seen.size(); ++i) {
      for (VertexId b : s) {
        if (h.adjacent(seen[i], b) && std::find(seen.begin(), seen.end(), b) == seen.end()) seen.push_back(b);
      }
    }
    if (seen.size() == s.size()) chordal = false;
  });
  return chordal;
}

// Whether the listed vertices (path then apexes) realize the mountain (one
// apex) or hill (two apexes) pattern exactly.
inline bool naive_pattern(const SignedGraph& g, Sign s, const std::vector<VertexId>& path,
                          const std::vector<VertexId>& apexes) {
  const std::size_t n = path.size();
  auto want = [&](VertexId a, VertexId b) -> EdgeState {
    auto pi = [&](VertexId x) -> int {
      for (std::size_t i = 0; i < n; ++i) {
        if (path[i] == x) return static_cast<int>(i);
      }
      return -1;
    };
    const int ia = pi(a), ib = pi(b);
    if (ia >= 0 && ib >= 0) return std::abs(ia - ib) == 1 ? edge_state(-s) : EdgeState::absent;
    if (ia < 0 && ib < 0) return edge_state(s);  // w1 ~s w2
    const VertexId apex = ia < 0 ? a : b;
    const int i = ia < 0 ? ib : ia;
    if (apexes.size() == 1) return (i >= 1 && i + 1 < static_cast<int>(n)) ? edge_state(s) : EdgeState::absent;
    if (apex == apexes[0]) return i + 1 < static_cast<int>(n) ? edge_state(s) : EdgeState::absent;
    return i >= 1 ? edge_state(s) : EdgeState::absent;
  };
  std::vector<VertexId> all = path;
  all.insert(all.end(), apexes.begin(), apexes.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (g.edge(all[i], all[j]) != want(all[i], all[j])) return false;
    }
  }
  return true;
}

// Tries every subset and every assignment of its vertices to roles.
inline bool naive_has_forbidden(const SignedGraph& g, int apex_count) {
  const int min_path = apex_count == 1 ? 3 : 2;
  bool found = false;
  for_each_subset(g.size(), [&](const std::vector<VertexId>& s) {
    if (found || static_cast<int>(s.size()) < min_path + apex_count) return;
    std::vector<VertexId> perm = s;
    do {
      const std::vector<VertexId> path(perm.begin(), perm.end() - apex_count);
      const std::vector<VertexId> apexes(perm.end() - apex_count, perm.end());
      for (Sign sg : {P, M}) {
        if (naive_pattern(g, sg, path, apexes)) {
          found = true;
          return;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return found;
}

}  // namespace signelim::testing
