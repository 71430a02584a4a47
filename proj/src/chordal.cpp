#include <algorithm>
#include <deque>

#include "signelim/characterize.hpp"

namespace signelim {

namespace {

std::vector<VertexId> maximum_cardinality_search(const UnsignedGraph& h) {
  const int n = h.size();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<bool> visited(static_cast<std::size_t>(n), false);
  std::vector<VertexId> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    VertexId best = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (!visited[v] && (best < 0 || weight[v] > weight[best])) best = v;
    }
    visited[best] = true;
    order.push_back(best);
    for (VertexId u : h.neighbors(best)) {
      if (!visited[u]) ++weight[u];
    }
  }
  return order;
}

// Shortest u-v path (inclusive) in h after deleting N[w] \ {u, v}. Neighbors
// are expanded lowest id first, so the result is deterministic.
std::vector<VertexId> path_avoiding(const UnsignedGraph& h, VertexId w, VertexId u, VertexId v) {
  const int n = h.size();
  std::vector<bool> blocked(static_cast<std::size_t>(n), false);
  blocked[w] = true;
  for (VertexId x : h.neighbors(w)) blocked[x] = (x != u && x != v);

  std::vector<VertexId> parent(static_cast<std::size_t>(n), -1);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<VertexId> queue{u};
  seen[u] = true;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (VertexId y : h.neighbors(x)) {
      if (seen[y] || blocked[y]) continue;
      seen[y] = true;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  if (!seen[v]) return {};
  std::vector<VertexId> path;
  for (VertexId x = v; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// w followed by the u..v path closes an induced cycle.
std::vector<VertexId> close_cycle(const UnsignedGraph& h, VertexId w, VertexId u, VertexId v) {
  auto path = path_avoiding(h, w, u, v);
  if (path.empty()) return {};
  path.insert(path.begin(), w);
  return path;
}

}  // namespace

ChordalityResult chordality_check(const UnsignedGraph& h) {
  const auto order = maximum_cardinality_search(h);
  const int n = h.size();
  for (int k = 0; k < n; ++k) {
    const VertexId w = order[k];
    std::vector<VertexId> earlier;
    for (int i = 0; i < k; ++i) {
      if (h.adjacent(order[i], w)) earlier.push_back(order[i]);
    }
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      for (std::size_t j = i + 1; j < earlier.size(); ++j) {
        if (h.adjacent(earlier[i], earlier[j])) continue;
        ChordalityResult result;
        result.cycle = close_cycle(h, w, earlier[i], earlier[j]);
        if (!result.cycle.empty()) return result;
        // No path around w for this pair; any chordless cycle still has a
        // vertex whose two cycle neighbors admit one.
        for (VertexId c = 0; c < n; ++c) {
          const auto nbrs = h.neighbors(c);
          for (std::size_t a = 0; a < nbrs.size(); ++a) {
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
              if (h.adjacent(nbrs[a], nbrs[b])) continue;
              result.cycle = close_cycle(h, c, nbrs[a], nbrs[b]);
              if (!result.cycle.empty()) return result;
            }
          }
        }
        // Unreachable: a failed elimination check implies a chordless cycle.
        return result;
      }
    }
  }
  return ChordalityResult{Ordering{order}, {}};
}

}  // namespace signelim
