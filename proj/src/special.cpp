#include "signelim/special.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace signelim {

namespace {

// Calls visit on every k-subset of 0..n-1 in lexicographic order; stops when
// visit returns true.
bool for_each_subset(int n, int k, const std::function<bool(const VertexSet&)>& visit) {
  if (k > n) return false;
  VertexSet idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool has_alternating_4path(const SignedGraph& g) {
  const int n = g.size();
  for (Sign s : kSigns) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (!g.adjacent(u, v, s)) continue;
        for (VertexId w = 0; w < n; ++w) {
          if (w == u || !g.adjacent(v, w, -s)) continue;
          for (VertexId x = 0; x < n; ++x) {
            if (x != u && x != v && g.adjacent(w, x, s)) return true;
          }
        }
      }
    }
  }
  return false;
}

// Whether the whole 4-vertex graph is a mountain with a three-vertex path.
bool is_four_vertex_mountain(const SignedGraph& g) {
  if (g.size() != 4) return false;
  std::array<VertexId, 4> p{0, 1, 2, 3};
  do {
    // (v1, v2, v3; w) = (p0, p1, p2; p3)
    for (Sign s : kSigns) {
      const bool match = g.adjacent(p[0], p[1], -s) && g.adjacent(p[1], p[2], -s) &&
                         g.adjacent(p[3], p[1], s) && !g.adjacent(p[0], p[2]) &&
                         !g.adjacent(p[0], p[3]) && !g.adjacent(p[2], p[3]);
      if (match) return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool has_induced_mono_cycle(const SignedGraph& g, int length) {
  return for_each_subset(g.size(), length, [&](const VertexSet& vs) {
    for (Sign s : kSigns) {
      bool ok = true;
      for (VertexId a : vs) {
        int deg = 0;
        for (VertexId b : vs) {
          if (a == b || !g.adjacent(a, b)) continue;
          if (!g.adjacent(a, b, s)) {
            ok = false;
            break;
          }
          ++deg;
        }
        if (!ok || deg != 2) {
          ok = false;
          break;
        }
      }
      // 2-regular on 4 or 5 vertices is a single cycle.
      if (ok) return true;
    }
    return false;
  });
}

}  // namespace

bool independence_below_three(const SignedGraph& g) {
  return !for_each_subset(g.size(), 3, [&](const VertexSet& t) {
    return !g.adjacent(t[0], t[1]) && !g.adjacent(t[1], t[2]) && !g.adjacent(t[0], t[2]);
  });
}

SpecialVerdict four_vertex_check(const SignedGraph& g) {
  SpecialVerdict out{"fv"};
  if (g.size() != 4) return out;
  out.applicable = true;
  for (VertexId v = 0; v < 4; ++v) {
    if (g.degree(v, Sign::plus) == 3 || g.degree(v, Sign::minus) == 3) {
      out.se = true;
      out.reason = "fv1";
      return out;
    }
  }
  const bool fv2 = !check_c1(g) && !is_four_vertex_mountain(g) && !has_alternating_4path(g);
  out.se = fv2;
  out.reason = fv2 ? "fv2" : "neither";
  return out;
}

SpecialVerdict chordal_underlying_check(const SignedGraph& g, const SearchOptions& opts) {
  SpecialVerdict out{"chordal"};
  if (!chordality_check(g.underlying()).chordal()) return out;
  out.applicable = true;
  if (check_c2(g)) {
    out.reason = "c2";
  } else if (find_mountain(g, opts) || find_hill(g, opts)) {
    out.reason = "c3";
  } else {
    out.se = true;
    out.reason = "c2-c3";
  }
  return out;
}

SpecialVerdict low_independence_check(const SignedGraph& g, const SearchOptions& opts) {
  SpecialVerdict out{"lowindep"};
  if (!independence_below_three(g)) return out;
  out.applicable = true;
  SearchOptions hills = opts;
  hills.min_path = 3;
  hills.max_path = 4;
  if (check_c2(g)) {
    out.reason = "c2";
  } else if (has_induced_mono_cycle(g, 4) || has_induced_mono_cycle(g, 5)) {
    out.reason = "i1";
  } else if (find_hill(g, hills)) {
    out.reason = "i2";
  } else {
    out.se = true;
    out.reason = "c2-i1-i2";
  }
  return out;
}

SpecialVerdict complete_graph_check(const SignedGraph& g) {
  SpecialVerdict out{"complete"};
  const int n = g.size();
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) return out;
    }
  }
  out.applicable = true;
  std::string found;
  for_each_subset(n, 4, [&](const VertexSet& vs) {
    for (Sign s : kSigns) {
      std::array<int, 4> deg{};
      int edges = 0;
      for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
          if (g.adjacent(vs[i], vs[j], s)) {
            ++deg[i];
            ++deg[j];
            ++edges;
          }
        }
      }
      std::sort(deg.begin(), deg.end());
      if (edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2}) found = "p4";
      if (edges == 2 && deg == std::array<int, 4>{1, 1, 1, 1}) found = "2k2";
      if (!found.empty()) return true;
    }
    return false;
  });
  out.se = found.empty();
  out.reason = found.empty() ? "no-p4-2k2" : found;
  return out;
}

std::vector<SpecialVerdict> all_special_checks(const SignedGraph& g, const SearchOptions& opts) {
  return {four_vertex_check(g), chordal_underlying_check(g, opts), low_independence_check(g, opts),
          complete_graph_check(g)};
}

bool remark_equivalence_check(const SignedGraph& g, const SearchOptions& opts) {
  const bool c1 = !check_c1(g);
  const bool c3 = !find_mountain(g, opts) && !find_hill(g, opts);
  const bool quads = !for_each_subset(g.size(), 4, [&](const VertexSet& vs) {
    return !is_signed_eliminable(g.induced_subgraph(vs).first);
  });
  return (c1 && c3 && quads) == characterize(g, opts).se();
}

std::string format_special(const SpecialVerdict& v) {
  std::string out = "special " + v.name + ": applicable=" + (v.applicable ? "y" : "n");
  out += " se=";
  out += v.applicable && v.se ? "y" : "n";
  out += " reason=" + v.reason;
  return out;
}

}  // namespace signelim
