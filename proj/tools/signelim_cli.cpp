// signelim: command-line frontend for signed elimination orderings.
//
// Exit codes: 0 success / SE, 1 negative answer (not SE, violation found,
// mismatches), 2 usage, parse or precondition errors.
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "signelim/characterize.hpp"
#include "signelim/graph.hpp"
#include "signelim/invariant.hpp"
#include "signelim/oracle.hpp"
#include "signelim/seo.hpp"
#include "signelim/special.hpp"

namespace {

using namespace signelim;
using json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SignedGraph load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_sg(text);
}

json ordering_json(const Ordering& nu) { return nu.sequence; }

json profile_json(const DegreeProfile& p) {
  json out = json::array();
  for (const auto& d : p) out.push_back({d.plus, d.minus});
  return out;
}

json special_json(const SpecialVerdict& v) {
  return {{"name", v.name}, {"applicable", v.applicable}, {"se", v.applicable && v.se}, {"reason", v.reason}};
}

const char* yn(bool b) { return b ? "y" : "n"; }

struct Common {
  std::string input = "-";
  bool as_json = false;
};

int run_check(const Common& c) {
  const auto g = load_graph(c.input);
  const auto nu = greedy_seo(g);
  if (c.as_json) {
    json j{{"se", nu.has_value()}};
    if (nu) j["ordering"] = ordering_json(*nu);
    std::cout << j.dump() << '\n';
  } else if (nu) {
    std::cout << "SE\n" << format_ordering(*nu) << '\n';
  } else {
    std::cout << "NOT-SE\n";
  }
  return nu ? kExitYes : kExitNo;
}

int run_verify(const Common& c, const std::string& order) {
  const auto g = load_graph(c.input);
  const auto nu = parse_ordering(order);
  nu.validate(g.size());
  const auto violation = is_seo(g, nu);
  if (c.as_json) {
    json j{{"seo", !violation}};
    if (violation) {
      j["violation"] = {{"rule", violation->rule == SeoRule::E1 ? "E1" : "E2"},
                        {"sign", std::string(1, sign_char(violation->sign))},
                        {"u", violation->u},
                        {"v", violation->v},
                        {"w", violation->w}};
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (violation ? format_violation(*violation) : std::string("SEO")) << '\n';
  }
  return violation ? kExitNo : kExitYes;
}

int run_invariant(const Common& c) {
  const auto g = load_graph(c.input);
  const auto nu = greedy_seo(g);
  if (!nu) {
    std::cerr << "signelim: graph is not signed-eliminable; the invariant is undefined\n";
    return kExitNo;
  }
  const auto profile = degree_profile(g, *nu);
  const auto degt = deg_tilde(g);
  if (c.as_json) {
    std::cout << json{{"profile", profile_json(profile)}, {"degt", degt}}.dump() << '\n';
  } else {
    std::cout << format_profile(profile) << '\n' << format_deg_tilde(degt) << '\n';
  }
  return kExitYes;
}

int run_characterize(const Common& c, bool no_cap, bool verify_cert) {
  const auto g = load_graph(c.input);
  SearchOptions opts;
  opts.override_cap = no_cap;
  const Verdict v = characterize(g, opts);
  std::string cert_line;
  if (v.certificate) cert_line = format_certificate(*v.certificate);

  if (c.as_json) {
    json j{{"c1+", v.c1_plus}, {"c1-", v.c1_minus}, {"c2", v.c2}, {"c3", v.c3}, {"se", v.se()}};
    if (v.ordering) j["ordering"] = ordering_json(*v.ordering);
    if (v.certificate) j["certificate"] = cert_line;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << format_flags(v) << '\n';
    if (v.ordering) std::cout << format_ordering(*v.ordering) << '\n';
    if (v.certificate) std::cout << cert_line << '\n';
  }

  if (verify_cert && v.certificate) {
    const auto check = verify_certificate(g, parse_certificate(cert_line));
    if (!check) {
      std::cerr << "signelim: certificate failed re-verification: " << check.reason << '\n';
      return kExitError;
    }
    std::cerr << "verify-cert pass\n";
  }
  if (!v.se() && !v.certificate) {
    std::cerr << "signelim: all conditions hold but no ordering was found\n";
    return kExitError;
  }
  return v.se() ? kExitYes : kExitNo;
}

int run_special(const Common& c, const std::string& which, bool no_cap) {
  const auto g = load_graph(c.input);
  SearchOptions opts;
  opts.override_cap = no_cap;
  std::vector<SpecialVerdict> verdicts;
  if (which == "fv" || which == "all") verdicts.push_back(four_vertex_check(g));
  if (which == "chordal" || which == "all") verdicts.push_back(chordal_underlying_check(g, opts));
  if (which == "lowindep" || which == "all") verdicts.push_back(low_independence_check(g, opts));
  if (which == "complete" || which == "all") verdicts.push_back(complete_graph_check(g));
  if (c.as_json) {
    json j = json::array();
    for (const auto& v : verdicts) j.push_back(special_json(v));
    std::cout << j.dump() << '\n';
  } else {
    for (const auto& v : verdicts) std::cout << format_special(v) << '\n';
  }
  return kExitYes;
}

int run_gen(const std::string& kind, const std::string& sign, int n) {
  if (sign != "+" && sign != "-") throw UsageError("--sign must be + or -");
  std::cout << serialize_sg(build_family(parse_family_kind(kind), sign == "+" ? Sign::plus : Sign::minus, n));
  return kExitYes;
}

int run_crosscheck(CrossCheckOptions opts, const std::vector<std::string>& checks, bool timing, bool as_json) {
  for (const auto& name : checks) {
    if (name == "invariance" || name == "all") opts.invariance = true;
    if (name == "remark" || name == "all") opts.remark = true;
    if (name == "alt-path" || name == "all") opts.alt_path = true;
  }
  if (opts.workers < 1) throw UsageError("--workers must be at least 1");
  const auto report = cross_check(opts);
  std::cout << (as_json ? report_json(report, timing) : format_report(report, timing));
  return report.mismatches.empty() ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed elimination orderings: recognition, certificates and invariants"};
  app.require_subcommand(1, 1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.input, "Input .sg file, '-' for standard input")->required();
    sub->add_flag("--json", common.as_json, "Emit JSON instead of text");
  };

  auto* check = app.add_subcommand("check", "Decide signed-eliminability and print an ordering");
  add_common(check);

  std::string order;
  auto* verify = app.add_subcommand("verify", "Check whether an ordering is a signed elimination ordering");
  add_common(verify);
  verify->add_option("--order", order, "Vertex ids in increasing position order")->required();

  auto* invariant = app.add_subcommand("invariant", "Print the degree profile and its difference multiset");
  add_common(invariant);

  bool no_cap = false;
  bool verify_cert = false;
  auto* characterize_cmd = app.add_subcommand("characterize", "Evaluate the forbidden-structure conditions");
  add_common(characterize_cmd);
  characterize_cmd->add_flag("--no-cap", no_cap, "Lift the vertex cap on mountain/hill searches");
  characterize_cmd->add_flag("--verify-cert", verify_cert)->group("");

  std::string which = "all";
  auto* special = app.add_subcommand("special", "Run the restricted-class checkers");
  add_common(special);
  special->add_option("--which", which, "Checker to run")
      ->check(CLI::IsMember({"fv", "chordal", "lowindep", "complete", "all"}));
  special->add_flag("--no-cap", no_cap, "Lift the vertex cap on mountain/hill searches");

  std::string kind;
  std::string sign;
  int family_n = 0;
  auto* gen = app.add_subcommand("gen", "Write a mountain, hill or capped variant as .sg");
  gen->add_option("--kind", kind)->required()->check(
      CLI::IsMember({"mountain", "hill", "capped_mountain", "capped_hill"}));
  gen->add_option("--sign", sign)->required();
  gen->add_option("--n", family_n, "Path length")->required();

  CrossCheckOptions cc;
  std::vector<std::string> checks;
  bool timing = false;
  bool cc_json = false;
  auto* crosscheck = app.add_subcommand("crosscheck", "Exhaustively cross-validate every checker");
  crosscheck->add_option("--n", cc.n, "Vertex count")->required();
  crosscheck->add_flag("--with-oracle", cc.oracle, "Include the brute-force oracle");
  crosscheck->add_option("--workers", cc.workers, "Worker threads");
  crosscheck->add_flag("--long-run", cc.long_run, "Allow n = 6");
  crosscheck->add_option("--checks", checks, "Extra properties: invariance, remark, alt-path, all")
      ->delimiter(',')
      ->check(CLI::IsMember({"invariance", "remark", "alt-path", "all"}));
  crosscheck->add_flag("--timing", timing, "Report elapsed time");
  crosscheck->add_flag("--json", cc_json, "Emit JSON instead of text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "signelim: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*check) return run_check(common);
    if (*verify) return run_verify(common, order);
    if (*invariant) return run_invariant(common);
    if (*characterize_cmd) return run_characterize(common, no_cap, verify_cert);
    if (*special) return run_special(common, which, no_cap);
    if (*gen) return run_gen(kind, sign, family_n);
    if (*crosscheck) return run_crosscheck(cc, checks, timing, cc_json);
  } catch (const std::exception& e) {
    std::cerr << "signelim: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
