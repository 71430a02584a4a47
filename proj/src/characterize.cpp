#include "signelim/characterize.hpp"

#include <functional>

namespace signelim {

std::optional<ChordlessCycle> check_c1(const SignedGraph& g, Sign s) {
  auto result = chordality_check(g.sign_restriction(s));
  if (result.chordal()) return std::nullopt;
  return ChordlessCycle{s, std::move(result.cycle)};
}

std::optional<ChordlessCycle> check_c1(const SignedGraph& g) {
  for (Sign s : kSigns) {
    if (auto c = check_c1(g, s)) return c;
  }
  return std::nullopt;
}

std::optional<AltPathViolation> check_c2(const SignedGraph& g) {
  const int n = g.size();
  for (Sign s : kSigns) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (!g.adjacent(u, v, s)) continue;
        for (VertexId w = 0; w < n; ++w) {
          if (w == u || !g.adjacent(v, w, -s)) continue;
          for (VertexId x = 0; x < n; ++x) {
            if (x == u || x == v || !g.adjacent(w, x, s)) continue;
            const bool ux = g.adjacent(u, x, s);
            const bool uw = g.adjacent(u, w, s);
            const bool xv = g.adjacent(x, v, s);
            if (!(ux && (uw || xv))) return AltPathViolation{s, u, v, w, x};
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

void check_cap(const SignedGraph& g, const SearchOptions& opts) {
  if (!opts.override_cap && g.size() > opts.cap) {
    throw CapError("graph has " + std::to_string(g.size()) + " vertices, above the search cap of " +
                   std::to_string(opts.cap));
  }
}

// Depth-first enumeration of induced (-s)-paths whose vertices all lie in
// `pool`, lowest id first. `visit` sees every path (including those of
// length one) and returns true to stop the search. Paths longer than
// max_len are not generated.
bool for_each_induced_path(const SignedGraph& g, Sign s, const std::vector<bool>& pool,
                           std::size_t max_len,
                           const std::function<bool(const std::vector<VertexId>&)>& visit) {
  const int n = g.size();
  std::vector<VertexId> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  std::function<bool()> extend = [&]() -> bool {
    if (visit(path)) return true;
    if (path.size() >= max_len) return false;
    for (VertexId x = 0; x < n; ++x) {
      if (!pool[x] || on_path[x] || !g.adjacent(path.back(), x, -s)) continue;
      bool induced = true;
      for (std::size_t i = 0; i + 1 < path.size() && induced; ++i) induced = !g.adjacent(path[i], x);
      if (!induced) continue;
      path.push_back(x);
      on_path[x] = true;
      if (extend()) return true;
      on_path[x] = false;
      path.pop_back();
    }
    return false;
  };

  if (max_len == 0) return false;
  for (VertexId start = 0; start < n; ++start) {
    if (!pool[start]) continue;
    path.assign(1, start);
    on_path[start] = true;
    if (extend()) return true;
    on_path[start] = false;
  }
  return false;
}

// Can `end` be attached to `path` at its `front` (or back) end by a (-s)-edge
// without touching any other path vertex?
bool attaches(const SignedGraph& g, Sign s, VertexId end, const std::vector<VertexId>& path,
              bool front) {
  const VertexId anchor = front ? path.front() : path.back();
  if (!g.adjacent(end, anchor, -s)) return false;
  for (VertexId p : path) {
    if (p != anchor && g.adjacent(end, p)) return false;
  }
  return true;
}

bool contains(const std::vector<VertexId>& path, VertexId x) {
  for (VertexId p : path) {
    if (p == x) return true;
  }
  return false;
}

std::size_t interior_limit(const SearchOptions& opts) {
  if (opts.max_path == INT_MAX) return SIZE_MAX;
  return opts.max_path < 2 ? 0 : static_cast<std::size_t>(opts.max_path - 2);
}

}  // namespace

std::optional<Mountain> find_mountain(const SignedGraph& g, const SearchOptions& opts) {
  check_cap(g, opts);
  const int n = g.size();
  std::optional<Mountain> found;
  for (Sign s : kSigns) {
    for (VertexId w = 0; w < n && !found; ++w) {
      std::vector<bool> middle(static_cast<std::size_t>(n), false);
      for (VertexId x = 0; x < n; ++x) middle[x] = g.adjacent(w, x, s);

      for_each_induced_path(g, s, middle, interior_limit(opts), [&](const std::vector<VertexId>& p) {
        const int length = static_cast<int>(p.size()) + 2;
        if (length < opts.min_path || length > opts.max_path) return false;
        for (VertexId a = 0; a < n; ++a) {
          if (a == w || g.adjacent(a, w) || contains(p, a) || !attaches(g, s, a, p, true)) continue;
          for (VertexId b = 0; b < n; ++b) {
            if (b == w || b == a || g.adjacent(b, w) || g.adjacent(a, b) || contains(p, b) ||
                !attaches(g, s, b, p, false)) {
              continue;
            }
            Mountain m{s, {a}, w};
            m.path.insert(m.path.end(), p.begin(), p.end());
            m.path.push_back(b);
            found = std::move(m);
            return true;
          }
        }
        return false;
      });
    }
    if (found) break;
  }
  return found;
}

std::optional<Hill> find_hill(const SignedGraph& g, const SearchOptions& opts) {
  check_cap(g, opts);
  const int n = g.size();
  for (Sign s : kSigns) {
    for (VertexId w1 = 0; w1 < n; ++w1) {
      for (VertexId w2 = 0; w2 < n; ++w2) {
        if (!g.adjacent(w1, w2, s)) continue;
        std::vector<bool> both(static_cast<std::size_t>(n), false);
        std::vector<VertexId> first_only;
        std::vector<VertexId> second_only;
        for (VertexId x = 0; x < n; ++x) {
          if (x == w1 || x == w2) continue;
          const bool a1 = g.adjacent(x, w1, s);
          const bool a2 = g.adjacent(x, w2, s);
          both[x] = a1 && a2;
          if (a1 && !g.adjacent(x, w2)) first_only.push_back(x);
          if (a2 && !g.adjacent(x, w1)) second_only.push_back(x);
        }

        // Two-vertex path: v_1 ~(-s) v_2 directly.
        if (opts.min_path <= 2 && opts.max_path >= 2) {
          for (VertexId a : first_only) {
            for (VertexId b : second_only) {
              if (g.adjacent(a, b, -s)) return Hill{s, {a, b}, w1, w2};
            }
          }
        }

        std::optional<Hill> found;
        for_each_induced_path(g, s, both, interior_limit(opts), [&](const std::vector<VertexId>& p) {
          const int length = static_cast<int>(p.size()) + 2;
          if (length < opts.min_path || length > opts.max_path) return false;
          for (VertexId a : first_only) {
            if (!attaches(g, s, a, p, true)) continue;
            for (VertexId b : second_only) {
              if (g.adjacent(a, b) || !attaches(g, s, b, p, false)) continue;
              Hill h{s, {a}, w1, w2};
              h.path.insert(h.path.end(), p.begin(), p.end());
              h.path.push_back(b);
              found = std::move(h);
              return true;
            }
          }
          return false;
        });
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

Verdict characterize(const SignedGraph& g, const SearchOptions& opts) {
  check_cap(g, opts);
  Verdict verdict;
  auto note = [&](auto&& cert) { verdict.witnesses.emplace_back(std::forward<decltype(cert)>(cert)); };

  auto plus_cycle = check_c1(g, Sign::plus);
  auto minus_cycle = check_c1(g, Sign::minus);
  verdict.c1_plus = !plus_cycle;
  verdict.c1_minus = !minus_cycle;
  if (plus_cycle) note(std::move(*plus_cycle));
  if (minus_cycle) note(std::move(*minus_cycle));

  auto alt = check_c2(g);
  verdict.c2 = !alt;
  if (alt) note(*alt);

  if (auto m = find_mountain(g, opts)) {
    verdict.c3 = false;
    note(std::move(*m));
  } else if (auto h = find_hill(g, opts)) {
    verdict.c3 = false;
    note(std::move(*h));
  } else {
    verdict.c3 = true;
  }

  if (verdict.conditions_hold()) {
    verdict.ordering = greedy_seo(g);
  } else {
    verdict.certificate = verdict.witnesses.front();
  }
  return verdict;
}

std::string format_flags(const Verdict& v) {
  auto yn = [](bool b) { return b ? 'y' : 'n'; };
  std::string out = "c1+=";
  out += yn(v.c1_plus);
  out += " c1-=";
  out += yn(v.c1_minus);
  out += " c2=";
  out += yn(v.c2);
  out += " c3=";
  out += yn(v.c3);
  return out;
}

}  // namespace signelim
