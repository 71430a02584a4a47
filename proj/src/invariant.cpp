#include "signelim/invariant.hpp"

#include <algorithm>

namespace signelim {

std::vector<DegreePair> degree_sequence(const SignedGraph& g, const Ordering& nu) {
  nu.validate(g.size());
  const auto& seq = nu.sequence;
  std::vector<DegreePair> out(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const EdgeState e = g.edge(seq[i], seq[j]);
      if (e == EdgeState::plus) ++out[i].plus;
      if (e == EdgeState::minus) ++out[i].minus;
    }
  }
  return out;
}

DegreeProfile degree_profile(const SignedGraph& g, const Ordering& nu) {
  DegreeProfile p = degree_sequence(g, nu);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<int> deg_tilde(const SignedGraph& g) {
  const auto nu = greedy_seo(g);
  if (!nu) throw GraphError("graph is not signed-eliminable");
  std::vector<int> out;
  for (const auto& d : degree_profile(g, *nu)) out.push_back(d.plus - d.minus);
  std::sort(out.begin(), out.end());
  return out;
}

bool invariance_check(const SignedGraph& g, int cap) {
  if (!is_signed_eliminable(g)) throw GraphError("graph is not signed-eliminable");
  SeoEnumerator stream(g, cap);
  std::optional<DegreeProfile> first;
  while (auto nu = stream.next()) {
    auto p = degree_profile(g, *nu);
    if (!first) {
      first = std::move(p);
    } else if (p != *first) {
      return false;
    }
  }
  return true;
}

std::string format_profile(const DegreeProfile& p) {
  std::string out = "profile:";
  for (const auto& d : p) out += " (" + std::to_string(d.plus) + "," + std::to_string(d.minus) + ")";
  return out;
}

std::string format_deg_tilde(const std::vector<int>& d) {
  std::string out = "degt:";
  for (int x : d) out += " " + std::to_string(x);
  return out;
}

}  // namespace signelim
