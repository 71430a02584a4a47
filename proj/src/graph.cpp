#include "signelim/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace signelim {

namespace {

std::string vertex_error(VertexId v, int n) {
  return "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n);
}

}  // namespace

// ---------------------------------------------------------------------------
// UnsignedGraph

UnsignedGraph::UnsignedGraph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void UnsignedGraph::check(VertexId v) const {
  if (v < 0 || v >= n_) throw GraphError(vertex_error(v, n_));
}

bool UnsignedGraph::adjacent(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

void UnsignedGraph::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

VertexSet UnsignedGraph::neighbors(VertexId v) const {
  check(v);
  VertexSet out;
  for (VertexId u = 0; u < n_; ++u) {
    if (adj_[static_cast<std::size_t>(v) * n_ + u]) out.push_back(u);
  }
  return out;
}

int UnsignedGraph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

std::size_t UnsignedGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

UnsignedGraph UnsignedGraph::induced(const VertexSet& keep) const {
  UnsignedGraph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// SignedGraph

SignedGraph::SignedGraph(int n) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  cells_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), EdgeState::absent);
}

SignedGraph SignedGraph::edgeless(int n) { return SignedGraph(n); }

SignedGraph SignedGraph::from_edges(int n, const std::vector<SignedEdge>& edges) {
  SignedGraph g(n);
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n) throw GraphError(vertex_error(e.u, n));
    if (e.v < 0 || e.v >= n) throw GraphError(vertex_error(e.v, n));
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (g.edge(e.u, e.v) != EdgeState::absent) {
      throw GraphError("duplicate pair " + std::to_string(std::min(e.u, e.v)) + " " +
                       std::to_string(std::max(e.u, e.v)));
    }
    g.set(e.u, e.v, edge_state(e.sign));
  }
  return g;
}

void SignedGraph::check(VertexId v) const {
  if (v < 0 || v >= n_) throw GraphError(vertex_error(v, n_));
}

void SignedGraph::set(VertexId u, VertexId v, EdgeState e) {
  cells_[slot(u, v)] = e;
  cells_[slot(v, u)] = e;
}

EdgeState SignedGraph::edge(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return cells_[slot(u, v)];
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v = u + 1; v < n_; ++v) {
      const EdgeState e = cells_[slot(u, v)];
      if (e != EdgeState::absent) out.push_back({u, v, static_cast<Sign>(e)});
    }
  }
  return out;
}

std::size_t SignedGraph::edge_count(Sign s) const {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), edge_state(s))) / 2;
}

std::size_t SignedGraph::edge_count() const {
  return edge_count(Sign::plus) + edge_count(Sign::minus);
}

VertexSet SignedGraph::neighborhood(VertexId v, Sign s, bool closed) const {
  check(v);
  VertexSet out;
  for (VertexId u = 0; u < n_; ++u) {
    if ((closed && u == v) || cells_[slot(v, u)] == edge_state(s)) out.push_back(u);
  }
  return out;
}

VertexSet SignedGraph::neighbors(VertexId v) const {
  check(v);
  VertexSet out;
  for (VertexId u = 0; u < n_; ++u) {
    if (cells_[slot(v, u)] != EdgeState::absent) out.push_back(u);
  }
  return out;
}

int SignedGraph::degree(VertexId v, Sign s) const {
  return static_cast<int>(neighborhood(v, s).size());
}

UnsignedGraph SignedGraph::sign_restriction(Sign s) const {
  UnsignedGraph h(n_);
  for (const auto& e : edges()) {
    if (e.sign == s) h.add_edge(e.u, e.v);
  }
  return h;
}

UnsignedGraph SignedGraph::underlying() const {
  UnsignedGraph h(n_);
  for (const auto& e : edges()) h.add_edge(e.u, e.v);
  return h;
}

std::pair<SignedGraph, std::vector<VertexId>> SignedGraph::induced_subgraph(VertexSet keep) const {
  for (VertexId v : keep) check(v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<VertexId> mapping(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) mapping[keep[i]] = static_cast<VertexId>(i);

  SignedGraph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      h.set(static_cast<int>(i), static_cast<int>(j), cells_[slot(keep[i], keep[j])]);
    }
  }
  return {std::move(h), std::move(mapping)};
}

SignedGraph SignedGraph::flipped() const {
  SignedGraph h = *this;
  for (auto& c : h.cells_) c = static_cast<EdgeState>(-static_cast<int>(c));
  return h;
}

SignedGraph SignedGraph::relabeled(const std::vector<VertexId>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw GraphError("relabeling has wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (VertexId p : perm) {
    check(p);
    if (seen[p]) throw GraphError("relabeling is not a permutation");
    seen[p] = true;
  }
  SignedGraph h(n_);
  for (const auto& e : edges()) h.set(perm[e.u], perm[e.v], edge_state(e.sign));
  return h;
}

SignedGraph SignedGraph::disjoint_union(const SignedGraph& other) const {
  SignedGraph h(n_ + other.n_);
  for (const auto& e : edges()) h.set(e.u, e.v, edge_state(e.sign));
  for (const auto& e : other.edges()) h.set(e.u + n_, e.v + n_, edge_state(e.sign));
  return h;
}

SignedGraph SignedGraph::with_edge(VertexId u, VertexId v, Sign s) const {
  check(u);
  check(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) throw GraphError("duplicate pair");
  SignedGraph h = *this;
  h.set(u, v, edge_state(s));
  return h;
}

// ---------------------------------------------------------------------------

std::vector<VertexSet> connected_components(const SignedGraph& g) {
  const int n = g.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    VertexSet members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (VertexId u : g.neighbors(members[head])) {
        if (comp[u] < 0) {
          comp[u] = id;
          members.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

std::uint64_t signed_graph_count(int n) {
  std::uint64_t total = 1;
  const int pairs = n * (n - 1) / 2;
  for (int i = 0; i < pairs; ++i) total *= 3;
  return total;
}

SignedGraphEnumerator::SignedGraphEnumerator(int n, int cap) : n_(n) {
  if (n < 0) throw GraphError("negative vertex count");
  if (n > cap) {
    throw CapError("enumeration size n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }
  total_ = signed_graph_count(n);
}

SignedGraph SignedGraphEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw GraphError("enumeration index out of range");
  std::vector<SignedEdge> edges;
  for (std::size_t k = pairs_.size(); k-- > 0;) {
    const auto digit = index % 3;
    index /= 3;
    if (digit == 0) continue;
    edges.push_back({pairs_[k].first, pairs_[k].second, digit == 1 ? Sign::plus : Sign::minus});
  }
  return SignedGraph::from_edges(n_, edges);
}

std::optional<SignedGraph> SignedGraphEnumerator::next() {
  if (cursor_ >= total_) return std::nullopt;
  return at(cursor_++);
}

// ---------------------------------------------------------------------------
// .sg text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ||
                               line[i] == '\v' || line[i] == '\f')) {
      ++i;
    }
    const std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r' ||
                                line[i] == '\v' || line[i] == '\f')) {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

int parse_index(std::string_view tok, std::size_t line_no, const char* what) {
  int value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 0) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

SignedGraph parse_sg(std::string_view text) {
  std::optional<int> n;
  std::vector<SignedEdge> edges;
  std::set<std::pair<int, int>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;

    if (!n) {
      if (tokens[0] != "sgraph" || tokens.size() != 2) {
        throw ParseError(line_no, "expected header 'sgraph <n>'");
      }
      n = parse_index(tokens[1], line_no, "vertex count");
      continue;
    }
    if (tokens[0] != "e") throw ParseError(line_no, "expected edge line 'e <u> <v> <+|->'");
    if (tokens.size() != 4) throw ParseError(line_no, "edge line needs exactly three fields");
    const int u = parse_index(tokens[1], line_no, "vertex");
    const int v = parse_index(tokens[2], line_no, "vertex");
    Sign s;
    if (tokens[3] == "+") {
      s = Sign::plus;
    } else if (tokens[3] == "-") {
      s = Sign::minus;
    } else {
      throw ParseError(line_no, "invalid sign '" + std::string(tokens[3]) + "'");
    }
    if (u >= *n || v >= *n) throw ParseError(line_no, vertex_error(std::max(u, v), *n));
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError(line_no, "duplicate pair " + std::to_string(std::min(u, v)) + " " +
                                    std::to_string(std::max(u, v)));
    }
    edges.push_back({u, v, s});
  }
  if (!n) throw ParseError(line_no, "missing 'sgraph <n>' header");
  return SignedGraph::from_edges(*n, edges);
}

std::string serialize_sg(const SignedGraph& g) {
  std::ostringstream os;
  os << "sgraph " << g.size() << '\n';
  for (const auto& e : g.edges()) os << "e " << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
  return os.str();
}

}  // namespace signelim
