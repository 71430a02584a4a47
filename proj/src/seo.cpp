#include "signelim/seo.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

namespace signelim {

std::vector<int> Ordering::positions() const {
  std::vector<int> pos(sequence.size(), -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) pos[sequence[i]] = static_cast<int>(i);
  return pos;
}

void Ordering::validate(int n) const {
  if (sequence.size() != static_cast<std::size_t>(n)) {
    throw GraphError("ordering has " + std::to_string(sequence.size()) + " entries, graph has " +
                     std::to_string(n) + " vertices");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (VertexId v : sequence) {
    if (v < 0 || v >= n) throw GraphError("ordering entry " + std::to_string(v) + " out of range");
    if (seen[v]) throw GraphError("ordering repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
}

Ordering Ordering::identity(int n) {
  Ordering nu;
  nu.sequence.resize(static_cast<std::size_t>(n));
  std::iota(nu.sequence.begin(), nu.sequence.end(), 0);
  return nu;
}

std::string format_ordering(const Ordering& nu) {
  std::string out;
  for (std::size_t i = 0; i < nu.sequence.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(nu.sequence[i]);
  }
  return out;
}

Ordering parse_ordering(std::string_view text) {
  Ordering nu;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\n' || text[i] == '\r') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value < 0) {
      throw GraphError("invalid ordering token at offset " + std::to_string(i));
    }
    nu.sequence.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !(text[i] == ' ' || text[i] == '\t' || text[i] == ',' ||
                             text[i] == '\n' || text[i] == '\r')) {
      throw GraphError("invalid ordering token at offset " + std::to_string(i));
    }
  }
  return nu;
}

std::string format_violation(const SeoViolation& v) {
  std::ostringstream os;
  os << "violation " << (v.rule == SeoRule::E1 ? "E1" : "E2") << ' ' << sign_char(v.sign)
     << " u=" << v.u << " v=" << v.v << " w=" << v.w;
  return os.str();
}

namespace {

// Checks (u, v, w) with w placed after u and v.
std::optional<SeoViolation> check_triple(const SignedGraph& g, VertexId u, VertexId v, VertexId w) {
  const EdgeState uv = g.edge(u, v);
  const EdgeState uw = g.edge(u, w);
  const EdgeState vw = g.edge(v, w);
  for (Sign s : kSigns) {
    if (uw == edge_state(s) && vw == edge_state(s) && uv != edge_state(s)) {
      return SeoViolation{SeoRule::E1, u, v, w, s};
    }
  }
  for (Sign s : kSigns) {
    if (uv == edge_state(s) && vw == edge_state(-s) && uw != edge_state(s)) {
      return SeoViolation{SeoRule::E2, u, v, w, s};
    }
  }
  return std::nullopt;
}

template <typename Visit>
void scan_triples(const SignedGraph& g, const Ordering& nu, Visit&& visit) {
  nu.validate(g.size());
  const auto& seq = nu.sequence;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        if (!visit(seq[i], seq[j], seq[k])) return;
      }
    }
  }
}

// Residual-graph view used by the greedy peel and by prefix enumeration.
std::optional<SimplicialViolation> simplicial_violation(const SignedGraph& g, VertexId v,
                                                        const std::vector<bool>& alive) {
  const int n = g.size();
  for (Sign s : kSigns) {
    for (VertexId a = 0; a < n; ++a) {
      if (!alive[a] || !g.adjacent(v, a, s)) continue;
      for (VertexId b = a + 1; b < n; ++b) {
        if (alive[b] && g.adjacent(v, b, s) && !g.adjacent(a, b, s)) {
          return SimplicialViolation{SimplicialRule::S1, s, a, b};
        }
      }
    }
  }
  // a ~(-s) b ~s v must force a ~(-s) v.
  for (Sign s : kSigns) {
    for (VertexId a = 0; a < n; ++a) {
      if (!alive[a] || a == v || g.adjacent(a, v, -s)) continue;
      for (VertexId b = 0; b < n; ++b) {
        if (alive[b] && g.adjacent(b, v, s) && g.adjacent(a, b, -s)) {
          return SimplicialViolation{SimplicialRule::S2, s, a, b};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<SeoViolation> is_seo(const SignedGraph& g, const Ordering& nu) {
  std::optional<SeoViolation> found;
  scan_triples(g, nu, [&](VertexId u, VertexId v, VertexId w) {
    found = check_triple(g, u, v, w);
    return !found;
  });
  return found;
}

std::vector<SeoViolation> all_seo_violations(const SignedGraph& g, const Ordering& nu) {
  std::vector<SeoViolation> out;
  scan_triples(g, nu, [&](VertexId u, VertexId v, VertexId w) {
    const EdgeState uv = g.edge(u, v);
    const EdgeState uw = g.edge(u, w);
    const EdgeState vw = g.edge(v, w);
    for (Sign s : kSigns) {
      if (uw == edge_state(s) && vw == edge_state(s) && uv != edge_state(s)) {
        out.push_back({SeoRule::E1, u, v, w, s});
      }
    }
    for (Sign s : kSigns) {
      if (uv == edge_state(s) && vw == edge_state(-s) && uw != edge_state(s)) {
        out.push_back({SeoRule::E2, u, v, w, s});
      }
    }
    return true;
  });
  return out;
}

bool is_seo_via_weights(const SignedGraph& g, const Ordering& nu) {
  bool ok = true;
  scan_triples(g, nu, [&](VertexId u, VertexId v, VertexId w) {
    const int uv = weight(g.edge(u, v));
    const int vw = weight(g.edge(v, w));
    const int uw = weight(g.edge(u, w));
    if (uw == 0 && vw == 0) return true;
    std::array<int, 3> sorted{uv, vw, uw};
    std::sort(sorted.begin(), sorted.end());
    ok = sorted[1] == uv;
    return ok;
  });
  return ok;
}

std::optional<SimplicialViolation> is_signed_simplicial(const SignedGraph& g, VertexId v) {
  if (v < 0 || v >= g.size()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return simplicial_violation(g, v, std::vector<bool>(static_cast<std::size_t>(g.size()), true));
}

VertexSet signed_simplicial_set(const SignedGraph& g) {
  const std::vector<bool> alive(static_cast<std::size_t>(g.size()), true);
  VertexSet out;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (!simplicial_violation(g, v, alive)) out.push_back(v);
  }
  return out;
}

std::optional<Ordering> greedy_seo(const SignedGraph& g) {
  const int n = g.size();
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  Ordering nu;
  nu.sequence.assign(static_cast<std::size_t>(n), -1);
  for (int pos = n - 1; pos >= 0; --pos) {
    VertexId pick = -1;
    for (VertexId v = 0; v < n && pick < 0; ++v) {
      if (alive[v] && !simplicial_violation(g, v, alive)) pick = v;
    }
    if (pick < 0) return std::nullopt;
    nu.sequence[pos] = pick;
    alive[pick] = false;
  }
  return nu;
}

// ---------------------------------------------------------------------------

SeoEnumerator::SeoEnumerator(SignedGraph g, int cap) : g_(std::move(g)) {
  if (g_.size() > cap) {
    throw CapError("SEO enumeration size n=" + std::to_string(g_.size()) + " exceeds cap " +
                   std::to_string(cap));
  }
  restart();
}

void SeoEnumerator::restart() {
  const auto n = static_cast<std::size_t>(g_.size());
  prefix_.clear();
  used_.assign(n, false);
  cursor_.assign(n + 1, 0);
  done_ = false;
}

bool SeoEnumerator::extendable(VertexId candidate) const {
  std::vector<bool> alive = used_;
  alive[candidate] = true;
  return !simplicial_violation(g_, candidate, alive);
}

std::optional<Ordering> SeoEnumerator::next() {
  const int n = g_.size();
  while (!done_) {
    const std::size_t depth = prefix_.size();
    if (depth == static_cast<std::size_t>(n)) {
      Ordering out{prefix_};
      if (n == 0) {
        done_ = true;
      } else {
        used_[prefix_.back()] = false;
        prefix_.pop_back();
      }
      return out;
    }
    VertexId& c = cursor_[depth];
    while (c < n && (used_[c] || !extendable(c))) ++c;
    if (c < n) {
      prefix_.push_back(c);
      used_[c] = true;
      ++c;
      cursor_[depth + 1] = 0;
    } else if (depth == 0) {
      done_ = true;
    } else {
      used_[prefix_.back()] = false;
      prefix_.pop_back();
    }
  }
  return std::nullopt;
}

std::vector<Ordering> enumerate_seos(const SignedGraph& g, int cap) {
  SeoEnumerator stream(g, cap);
  std::vector<Ordering> out;
  while (auto nu = stream.next()) out.push_back(std::move(*nu));
  return out;
}

}  // namespace signelim
