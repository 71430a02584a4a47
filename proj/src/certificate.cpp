// Certificate text forms and an independent checker. The checker only asks
// the graph for pair states; it does not reuse any of the search code.
#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "signelim/characterize.hpp"

namespace signelim {

namespace {

std::string join(const std::vector<VertexId>& ids, char sep) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ids[i]);
  }
  return out;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string format_certificate(const Certificate& c) {
  return std::visit(
      overloaded{
          [](const ChordlessCycle& x) {
            return std::string("cert chordless-cycle ") + sign_char(x.sign) + ' ' + join(x.cycle, ' ');
          },
          [](const AltPathViolation& x) {
            return std::string("cert alt-path ") + sign_char(x.sign) + ' ' + join({x.u, x.v, x.w, x.x}, ' ');
          },
          [](const Mountain& x) {
            return std::string("cert mountain ") + sign_char(x.sign) + " path=" + join(x.path, ',') +
                   " apex=" + std::to_string(x.apex);
          },
          [](const Hill& x) {
            return std::string("cert hill ") + sign_char(x.sign) + " path=" + join(x.path, ',') +
                   " apexes=" + std::to_string(x.apex1) + "," + std::to_string(x.apex2);
          },
      },
      c);
}

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

VertexId to_id(std::string_view tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw GraphError("malformed certificate vertex '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<VertexId> id_list(std::string_view tok) {
  std::vector<VertexId> out;
  std::size_t start = 0;
  while (start <= tok.size()) {
    auto comma = tok.find(',', start);
    if (comma == std::string_view::npos) comma = tok.size();
    out.push_back(to_id(tok.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

Sign to_sign(const std::string& tok) {
  if (tok == "+") return Sign::plus;
  if (tok == "-") return Sign::minus;
  throw GraphError("malformed certificate sign '" + tok + "'");
}

std::string_view after_key(const std::string& tok, std::string_view key) {
  if (tok.rfind(key, 0) != 0) throw GraphError("certificate field must start with '" + std::string(key) + "'");
  return std::string_view(tok).substr(key.size());
}

}  // namespace

Certificate parse_certificate(std::string_view line) {
  const auto t = tokens_of(line);
  if (t.size() < 3 || t[0] != "cert") throw GraphError("certificate line must start with 'cert <kind> <sign>'");
  const Sign s = to_sign(t[2]);
  if (t[1] == "chordless-cycle") {
    ChordlessCycle c{s, {}};
    for (std::size_t i = 3; i < t.size(); ++i) c.cycle.push_back(to_id(t[i]));
    return c;
  }
  if (t[1] == "alt-path") {
    if (t.size() != 7) throw GraphError("alt-path certificate needs four vertices");
    return AltPathViolation{s, to_id(t[3]), to_id(t[4]), to_id(t[5]), to_id(t[6])};
  }
  if (t[1] == "mountain") {
    if (t.size() != 5) throw GraphError("mountain certificate needs path= and apex=");
    return Mountain{s, id_list(after_key(t[3], "path=")), to_id(after_key(t[4], "apex="))};
  }
  if (t[1] == "hill") {
    if (t.size() != 5) throw GraphError("hill certificate needs path= and apexes=");
    const auto apexes = id_list(after_key(t[4], "apexes="));
    if (apexes.size() != 2) throw GraphError("hill certificate needs exactly two apexes");
    return Hill{s, id_list(after_key(t[3], "path=")), apexes[0], apexes[1]};
  }
  throw GraphError("unknown certificate kind '" + t[1] + "'");
}

// ---------------------------------------------------------------------------

namespace {

CertificateCheck fail(std::string reason) { return {false, std::move(reason)}; }

std::string pair_name(VertexId a, VertexId b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

CertificateCheck vertices_ok(const SignedGraph& g, const std::vector<VertexId>& vs) {
  std::set<VertexId> seen;
  for (VertexId v : vs) {
    if (v < 0 || v >= g.size()) return fail("vertex " + std::to_string(v) + " out of range");
    if (!seen.insert(v).second) return fail("vertex " + std::to_string(v) + " repeated");
  }
  return {true, {}};
}

// The induced subgraph on `vs` must carry exactly the pair states listed in
// `expected`; unlisted pairs must be absent.
CertificateCheck induced_exactly(const SignedGraph& g, const std::vector<VertexId>& vs,
                                 const std::map<std::pair<VertexId, VertexId>, EdgeState>& expected) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      const VertexId a = std::min(vs[i], vs[j]);
      const VertexId b = std::max(vs[i], vs[j]);
      const auto it = expected.find({a, b});
      const EdgeState want = it == expected.end() ? EdgeState::absent : it->second;
      if (g.edge(a, b) != want) return fail("pair " + pair_name(a, b) + " does not match the pattern");
    }
  }
  return {true, {}};
}

void expect(std::map<std::pair<VertexId, VertexId>, EdgeState>& m, VertexId a, VertexId b, Sign s) {
  m[{std::min(a, b), std::max(a, b)}] = edge_state(s);
}

CertificateCheck verify(const SignedGraph& g, const ChordlessCycle& c) {
  if (c.cycle.size() < 4) return fail("cycle shorter than four");
  if (auto r = vertices_ok(g, c.cycle); !r) return r;
  const std::size_t k = c.cycle.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      const bool has = g.edge(c.cycle[i], c.cycle[j]) == edge_state(c.sign);
      if (consecutive && !has) return fail("cycle edge " + pair_name(c.cycle[i], c.cycle[j]) + " missing");
      if (!consecutive && has) return fail("chord " + pair_name(c.cycle[i], c.cycle[j]) + " present");
    }
  }
  return {true, {}};
}

CertificateCheck verify(const SignedGraph& g, const AltPathViolation& c) {
  if (auto r = vertices_ok(g, {c.u, c.v, c.w, c.x}); !r) return r;
  const auto has = [&](VertexId a, VertexId b, Sign s) { return g.edge(a, b) == edge_state(s); };
  if (!has(c.u, c.v, c.sign)) return fail("u-v edge missing");
  if (!has(c.v, c.w, -c.sign)) return fail("v-w edge missing");
  if (!has(c.w, c.x, c.sign)) return fail("w-x edge missing");
  const bool ux = has(c.u, c.x, c.sign);
  if (ux && has(c.u, c.w, c.sign)) return fail("closing edges u-w and u-x present");
  if (ux && has(c.x, c.v, c.sign)) return fail("closing edges u-x and x-v present");
  return {true, {}};
}

using Pattern = std::map<std::pair<VertexId, VertexId>, EdgeState>;

// Runs the exact-pattern check for `sign`; when it fails but the opposite
// sign fits, the reason says so.
template <typename Build>
CertificateCheck match_pattern(const SignedGraph& g, const std::vector<VertexId>& all, Sign sign,
                               Build&& build) {
  auto r = induced_exactly(g, all, build(sign));
  if (!r && induced_exactly(g, all, build(-sign))) return fail("sign mismatch");
  return r;
}

CertificateCheck verify(const SignedGraph& g, const Mountain& c) {
  const std::size_t n = c.path.size();
  if (n < 3) return fail("mountain path shorter than three");
  std::vector<VertexId> all = c.path;
  all.push_back(c.apex);
  if (auto r = vertices_ok(g, all); !r) return r;
  return match_pattern(g, all, c.sign, [&](Sign s) {
    Pattern pattern;
    for (std::size_t i = 0; i + 1 < n; ++i) expect(pattern, c.path[i], c.path[i + 1], -s);
    for (std::size_t i = 1; i + 1 < n; ++i) expect(pattern, c.apex, c.path[i], s);
    return pattern;
  });
}

CertificateCheck verify(const SignedGraph& g, const Hill& c) {
  const std::size_t n = c.path.size();
  if (n < 2) return fail("hill path shorter than two");
  std::vector<VertexId> all = c.path;
  all.push_back(c.apex1);
  all.push_back(c.apex2);
  if (auto r = vertices_ok(g, all); !r) return r;
  return match_pattern(g, all, c.sign, [&](Sign s) {
    Pattern pattern;
    for (std::size_t i = 0; i + 1 < n; ++i) expect(pattern, c.path[i], c.path[i + 1], -s);
    expect(pattern, c.apex1, c.apex2, s);
    for (std::size_t i = 0; i + 1 < n; ++i) expect(pattern, c.apex1, c.path[i], s);
    for (std::size_t i = 1; i < n; ++i) expect(pattern, c.apex2, c.path[i], s);
    return pattern;
  });
}

}  // namespace

CertificateCheck verify_certificate(const SignedGraph& g, const Certificate& c) {
  return std::visit([&](const auto& cert) { return verify(g, cert); }, c);
}

}  // namespace signelim
