#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "signelim/graph.hpp"
#include "signelim/seo.hpp"

namespace signelim {

inline constexpr int kOracleCap = 8;

// Tries all orderings in lexicographic order of the sequence and returns the
// first one is_seo accepts. Throws CapError above kOracleCap vertices.
std::optional<Ordering> brute_force_se(const SignedGraph& g);

enum class FamilyKind { mountain, hill, capped_mountain, capped_hill };

FamilyKind parse_family_kind(std::string_view name);
std::string family_kind_name(FamilyKind kind);

// Fixture layout: path v_1..v_n is 0..n-1, then the apex (n) or the apexes
// (n, n+1). Capped variants add w ~sign v_n (mountain) or w_1 ~sign v_n
// (hill). Mountains need n >= 3, hills n >= 2.
SignedGraph build_family(FamilyKind kind, Sign sign, int n);

// The ordering w, v_1..v_n (mountain shapes) or w_1, w_2, v_1..v_n (hill
// shapes) on a build_family layout.
Ordering apex_first_ordering(FamilyKind kind, int n);

struct CrossCheckOptions {
  int n = 4;
  // n = 6 is refused unless this is set.
  bool long_run = false;
  int workers = 1;

  bool greedy = true;
  bool characterize = true;
  bool special = true;
  bool certificates = true;
  bool oracle = false;
  // Extra per-instance properties on SE graphs.
  bool invariance = false;
  bool remark = false;
  bool alt_path = false;
};

struct Mismatch {
  std::uint64_t index = 0;
  std::string sg;
  // Per-checker verdicts, in checker order, e.g. {"greedy", "SE"}.
  std::vector<std::pair<std::string, std::string>> verdicts;
  std::vector<std::string> notes;
};

struct CrossCheckReport {
  int n = 0;
  std::uint64_t instances = 0;
  std::uint64_t se_instances = 0;
  std::uint64_t certificates_checked = 0;
  std::vector<std::string> checkers_run;
  std::vector<Mismatch> mismatches;
  std::chrono::duration<double> elapsed{};
};

// Runs every selected checker on every labeled signed graph on opts.n
// vertices. Results are merged in enumeration order, so the report content
// does not depend on the worker count.
CrossCheckReport cross_check(const CrossCheckOptions& opts);

// Header line plus one line per mismatch; the elapsed time is appended
// only when requested.
std::string format_report(const CrossCheckReport& r, bool timing = false);
std::string report_json(const CrossCheckReport& r, bool timing = false);

}  // namespace signelim
