#pragma once

#include <string>
#include <vector>

#include "signelim/graph.hpp"
#include "signelim/seo.hpp"

namespace signelim {

struct DegreePair {
  int plus = 0;
  int minus = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
  friend auto operator<=>(const DegreePair&, const DegreePair&) = default;
};

// Canonical multiset form: pairs sorted lexicographically.
using DegreeProfile = std::vector<DegreePair>;

// For each position i, counts the plus and minus neighbors of the i-th
// vertex placed at or before i. Defined for any ordering; only SEOs give an
// ordering-independent result.
DegreeProfile degree_profile(const SignedGraph& g, const Ordering& nu);
// Same, indexed by position instead of sorted.
std::vector<DegreePair> degree_sequence(const SignedGraph& g, const Ordering& nu);

// Sorted multiset of d_plus - d_minus. Throws GraphError when g is not
// signed-eliminable.
std::vector<int> deg_tilde(const SignedGraph& g);

// True when every SEO of g produces the same profile. Throws GraphError
// when g is not signed-eliminable and CapError above the enumeration cap.
bool invariance_check(const SignedGraph& g, int cap = SeoEnumerator::kDefaultCap);

std::string format_profile(const DegreeProfile& p);  // "profile: (a,b) (c,d) ..."
std::string format_deg_tilde(const std::vector<int>& d);  // "degt: x y ..."

}  // namespace signelim
