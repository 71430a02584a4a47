#pragma once

#include <string>
#include <vector>

#include "signelim/characterize.hpp"
#include "signelim/graph.hpp"

namespace signelim {

// Outcome of a restricted-class checker. `se` and `reason` are meaningful
// only when the class precondition held.
struct SpecialVerdict {
  std::string name;  // fv | chordal | lowindep | complete
  bool applicable = false;
  bool se = false;
  // Deciding clause: fv1, fv2, neither (fv); c2-c3, c2, c3 (chordal);
  // c2-i1-i2, c2, i1, i2 (lowindep); no-p4-2k2, p4, 2k2 (complete); n/a.
  std::string reason = "n/a";
};

// Four vertices: SE iff some vertex has degree three in one sign, or both
// signs are chordal, the graph is not itself a mountain and no alternating
// 4-path exists.
SpecialVerdict four_vertex_check(const SignedGraph& g);

// Chordal underlying graph: SE iff C2 holds and there is no mountain or hill.
SpecialVerdict chordal_underlying_check(const SignedGraph& g, const SearchOptions& opts = {});

// Independence number below three: SE iff C2 holds, no single-sign 4- or
// 5-cycle is induced in the whole graph, and no hill on 5 or 6 vertices
// is induced.
SpecialVerdict low_independence_check(const SignedGraph& g, const SearchOptions& opts = {});

// Complete underlying graph: SE iff neither sign restriction contains an
// induced P4 or an induced pair of disjoint edges.
SpecialVerdict complete_graph_check(const SignedGraph& g);

std::vector<SpecialVerdict> all_special_checks(const SignedGraph& g, const SearchOptions& opts = {});

// Compares [C1, C3 and every 4-vertex induced subgraph SE] with the full
// characterization. True when the two agree.
bool remark_equivalence_check(const SignedGraph& g, const SearchOptions& opts = {});

bool independence_below_three(const SignedGraph& g);

std::string format_special(const SpecialVerdict& v);

}  // namespace signelim
