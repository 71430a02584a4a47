#include "signelim/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "signelim/characterize.hpp"
#include "signelim/invariant.hpp"
#include "signelim/special.hpp"

namespace signelim {

std::optional<Ordering> brute_force_se(const SignedGraph& g) {
  if (g.size() > kOracleCap) {
    throw CapError("brute-force oracle is limited to " + std::to_string(kOracleCap) + " vertices");
  }
  Ordering nu = Ordering::identity(g.size());
  do {
    if (!is_seo(g, nu)) return nu;
  } while (std::next_permutation(nu.sequence.begin(), nu.sequence.end()));
  return std::nullopt;
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "mountain") return FamilyKind::mountain;
  if (name == "hill") return FamilyKind::hill;
  if (name == "capped_mountain") return FamilyKind::capped_mountain;
  if (name == "capped_hill") return FamilyKind::capped_hill;
  throw GraphError("unknown family kind '" + std::string(name) + "'");
}

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::mountain:
      return "mountain";
    case FamilyKind::hill:
      return "hill";
    case FamilyKind::capped_mountain:
      return "capped_mountain";
    case FamilyKind::capped_hill:
      return "capped_hill";
  }
  return {};
}

namespace {

bool mountain_shaped(FamilyKind kind) {
  return kind == FamilyKind::mountain || kind == FamilyKind::capped_mountain;
}

}  // namespace

SignedGraph build_family(FamilyKind kind, Sign sign, int n) {
  const bool mountain = mountain_shaped(kind);
  const int minimum = mountain ? 3 : 2;
  if (n < minimum) {
    throw GraphError(family_kind_name(kind) + " needs a path of at least " + std::to_string(minimum) +
                     " vertices");
  }
  std::vector<SignedEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, -sign});
  if (mountain) {
    const VertexId w = n;
    for (int i = 1; i + 1 < n; ++i) edges.push_back({w, i, sign});
    if (kind == FamilyKind::capped_mountain) edges.push_back({w, n - 1, sign});
    return SignedGraph::from_edges(n + 1, edges);
  }
  const VertexId w1 = n;
  const VertexId w2 = n + 1;
  edges.push_back({w1, w2, sign});
  for (int i = 0; i + 1 < n; ++i) edges.push_back({w1, i, sign});
  for (int i = 1; i < n; ++i) edges.push_back({w2, i, sign});
  if (kind == FamilyKind::capped_hill) edges.push_back({w1, n - 1, sign});
  return SignedGraph::from_edges(n + 2, edges);
}

Ordering apex_first_ordering(FamilyKind kind, int n) {
  Ordering nu;
  if (mountain_shaped(kind)) {
    nu.sequence.push_back(n);
  } else {
    nu.sequence.push_back(n);
    nu.sequence.push_back(n + 1);
  }
  for (int i = 0; i < n; ++i) nu.sequence.push_back(i);
  return nu;
}

// ---------------------------------------------------------------------------

namespace {

const char* se_word(bool se) { return se ? "SE" : "NOT-SE"; }

// On an SE graph, u ~s v ~(-s) w ~s x forces u ~s x and (u ~s w or v ~s x).
std::optional<std::string> alternating_path_property(const SignedGraph& g) {
  const int n = g.size();
  for (Sign s : kSigns) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (!g.adjacent(u, v, s)) continue;
        for (VertexId w = 0; w < n; ++w) {
          if (w == u || !g.adjacent(v, w, -s)) continue;
          for (VertexId x = 0; x < n; ++x) {
            if (x == u || x == v || !g.adjacent(w, x, s)) continue;
            if (!g.adjacent(u, x, s) || !(g.adjacent(u, w, s) || g.adjacent(v, x, s))) {
              std::ostringstream os;
              os << "alt-path property fails at " << sign_char(s) << ' ' << u << ' ' << v << ' ' << w
                 << ' ' << x;
              return os.str();
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

struct ChunkResult {
  std::vector<Mismatch> mismatches;
  std::uint64_t se = 0;
  std::uint64_t certificates = 0;
};

void check_instance(const SignedGraph& g, std::uint64_t index, const CrossCheckOptions& opts,
                    ChunkResult& out) {
  SearchOptions search;
  search.override_cap = true;

  Mismatch m;
  m.index = index;
  const auto greedy = greedy_seo(g);
  const bool se = greedy.has_value();
  bool disagree = false;
  auto record = [&](std::string name, bool verdict) {
    m.verdicts.emplace_back(std::move(name), se_word(verdict));
    disagree = disagree || verdict != se;
  };

  m.verdicts.emplace_back("greedy", se_word(se));
  if (se) ++out.se;
  if (greedy && is_seo(g, *greedy)) m.notes.push_back("greedy ordering rejected by is_seo");

  if (opts.characterize) {
    const Verdict v = characterize(g, search);
    record("characterize", v.se());
    if (v.se() != v.conditions_hold()) m.notes.push_back("conditions hold but greedy failed");
    if (v.ordering && is_seo(g, *v.ordering)) m.notes.push_back("characterize ordering rejected");
    if (opts.certificates) {
      std::vector<Certificate> certs = v.witnesses;
      if (!certs.empty() && std::holds_alternative<Mountain>(certs.back())) {
        if (auto h = find_hill(g, search)) certs.emplace_back(std::move(*h));
      }
      for (const auto& c : certs) {
        ++out.certificates;
        if (auto r = verify_certificate(g, c); !r) {
          m.notes.push_back("certificate rejected (" + r.reason + "): " + format_certificate(c));
        }
      }
    }
  }
  if (opts.oracle) record("oracle", brute_force_se(g).has_value());
  if (opts.special) {
    for (const auto& sv : all_special_checks(g, search)) {
      if (sv.applicable) record(sv.name, sv.se);
    }
  }
  if (opts.invariance && se && !invariance_check(g)) m.notes.push_back("degree profile depends on the SEO");
  if (opts.remark && !remark_equivalence_check(g, search)) m.notes.push_back("four-vertex remark disagrees");
  if (opts.alt_path && se) {
    if (auto note = alternating_path_property(g)) m.notes.push_back(*note);
  }

  if (disagree || !m.notes.empty()) {
    m.sg = serialize_sg(g);
    out.mismatches.push_back(std::move(m));
  }
}

}  // namespace

CrossCheckReport cross_check(const CrossCheckOptions& opts) {
  if (opts.n < 0) throw GraphError("negative vertex count");
  if (opts.n > 6 || (opts.n == 6 && !opts.long_run)) {
    throw CapError("cross-check size n=" + std::to_string(opts.n) +
                   (opts.n == 6 ? " needs the long-run flag" : " exceeds the cap of 6"));
  }
  const auto started = std::chrono::steady_clock::now();
  const SignedGraphEnumerator graphs(opts.n, 6);

  CrossCheckReport report;
  report.n = opts.n;
  report.instances = graphs.count();
  report.checkers_run.push_back("greedy");
  if (opts.characterize) report.checkers_run.push_back("characterize");
  if (opts.characterize && opts.certificates) report.checkers_run.push_back("certificates");
  if (opts.oracle) report.checkers_run.push_back("oracle");
  if (opts.special) report.checkers_run.push_back("special");
  if (opts.invariance) report.checkers_run.push_back("invariance");
  if (opts.remark) report.checkers_run.push_back("remark");
  if (opts.alt_path) report.checkers_run.push_back("alt-path");

  constexpr std::uint64_t kChunk = 1024;
  const std::uint64_t chunks = (report.instances + kChunk - 1) / kChunk;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      const std::uint64_t end = std::min(report.instances, (c + 1) * kChunk);
      for (std::uint64_t i = c * kChunk; i < end; ++i) check_instance(graphs.at(i), i, opts, results[c]);
    }
  };
  std::vector<std::jthread> pool;
  for (int w = 1; w < opts.workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  for (auto& r : results) {
    report.se_instances += r.se;
    report.certificates_checked += r.certificates;
    for (auto& m : r.mismatches) report.mismatches.push_back(std::move(m));
  }
  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

namespace {

std::string one_line_sg(const std::string& sg) {
  std::string out;
  for (char c : sg) {
    if (c == '\n') {
      out += '|';
    } else {
      out += c;
    }
  }
  if (!out.empty() && out.back() == '|') out.pop_back();
  return out;
}

}  // namespace

std::string format_report(const CrossCheckReport& r, bool timing) {
  std::ostringstream os;
  os << "crosscheck n=" << r.n << " instances=" << r.instances << " mismatches=" << r.mismatches.size();
  if (timing) os << " elapsed=" << r.elapsed.count() << "s";
  os << '\n';
  for (const auto& m : r.mismatches) {
    os << "mismatch index=" << m.index;
    for (const auto& [name, verdict] : m.verdicts) os << ' ' << name << '=' << verdict;
    for (const auto& note : m.notes) os << " note=\"" << note << '"';
    os << " sg=\"" << one_line_sg(m.sg) << "\"\n";
  }
  return os.str();
}

std::string report_json(const CrossCheckReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["instances"] = r.instances;
  j["se_instances"] = r.se_instances;
  j["certificates_checked"] = r.certificates_checked;
  j["checkers_run"] = r.checkers_run;
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : r.mismatches) {
    nlohmann::ordered_json jm;
    jm["index"] = m.index;
    jm["verdicts"] = nlohmann::ordered_json::object();
    for (const auto& [name, verdict] : m.verdicts) jm["verdicts"][name] = verdict;
    jm["notes"] = m.notes;
    jm["sg"] = m.sg;
    j["mismatches"].push_back(std::move(jm));
  }
  if (timing) j["elapsed_seconds"] = r.elapsed.count();
  return j.dump(2) + "\n";
}

}  // namespace signelim
