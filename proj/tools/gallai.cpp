// gallai: longest-path intersection checks, forbidden-pair sweeps and
// certificates from the command line.
//
// Exit codes: 0 all checks consistent, 1 usage or input error, 2 alarm or
// class violation.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gallai/blocks.hpp"
#include "gallai/comb.hpp"
#include "gallai/error.hpp"
#include "gallai/fixtures.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/hamiltonicity.hpp"
#include "gallai/paths.hpp"
#include "gallai/patterns.hpp"
#include "gallai/proof_engine.hpp"
#include "gallai/report.hpp"
#include "gallai/sweep.hpp"

namespace {

using namespace gallai;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAlarm = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "K1_3:P6" or just "P6".
PatternName parse_pair(const std::string& text) {
  std::string_view s = text;
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    if (parse_pattern_name(s.substr(0, colon)) != PatternName::K1_3)
      throw Error(ErrorCode::InvalidArgument, "only pairs (K1_3, S) are supported: '" + text + "'");
    s = s.substr(colon + 1);
  }
  return parse_pattern_name(s);
}

std::string pair_name(PatternName s) { return "K1_3:" + std::string(to_string(s)); }

struct CommonFlags {
  std::uint64_t paths_cap = PathOptions{}.path_cap;
  int dp_limit = PathOptions{}.dp_limit;

  PathOptions options() const {
    PathOptions o = PathOptions::from_environment();
    o.path_cap = paths_cap;
    o.dp_limit = dp_limit;
    return o;
  }
};

struct VerifyArgs {
  std::string input;
  std::string fixture;
  std::vector<std::string> pairs;
  bool gallai = false, classify = false, certify = false, claims = false, comb = false;
  bool hamiltonicity = false, theorem4 = false, theorem1 = false, blocks = false, emit_paths = false;
  int k_tuple = 0;
};

int run_verify(const VerifyArgs& a, const CommonFlags& flags) {
  if (a.input.empty() == a.fixture.empty()) throw CLI::ValidationError("verify", "give exactly one of INPUT or --fixture");
  const Graph g = a.fixture.empty() ? parse_graph_text(slurp(a.input)) : make_fixture(a.fixture).graph;
  const PathOptions options = flags.options();
  std::vector<PatternName> pairs;
  for (const auto& p : a.pairs) pairs.push_back(parse_pair(p));

  const bool any = a.gallai || a.classify || a.certify || a.claims || a.comb || a.hamiltonicity || a.theorem4 ||
                   a.theorem1 || a.blocks || a.emit_paths || a.k_tuple;
  Json out{{"schema", kReportSchema}, {"graph", Json{{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}}}};
  Json alarms = Json::array();
  const bool connected = g.order() > 0 && is_connected(g);

  std::optional<LongestPathReport> report;
  auto full_report = [&]() -> const LongestPathReport& {
    if (!report) report = enumerate_longest_paths(g, options);
    return *report;
  };

  if (a.gallai || !any) out["gallai"] = to_json(gallai_check(g, options));
  if (a.emit_paths) out["paths"] = to_json(full_report(), true);
  if (a.k_tuple) out["k_tuple"] = Json{{"k", a.k_tuple}, {"result", to_json(k_tuple_intersection_check(full_report(), a.k_tuple))}};
  if (a.blocks) out["blocks"] = to_json(block_cut_tree(g));

  std::vector<PatternName> in_class;
  if (a.classify || a.certify || a.claims) {
    in_class = classify_hamiltonian_pairs(g);
    if (!connected) in_class.clear();
    Json names = Json::array();
    for (PatternName s : in_class) names.push_back(pair_name(s));
    if (a.classify) out["classify"] = Json{{"connected", connected}, {"pairs", names}};
  }
  const std::vector<PatternName> targets = pairs.empty() ? in_class : pairs;

  if (a.certify) {
    Json certs = Json::array();
    if (targets.empty()) alarms.push_back("class violation: graph is in no (K1_3, S) class");
    for (PatternName s : targets) {
      try {
        certs.push_back(to_json(certified_common_vertex(g, s, options)));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotInClass && e.code() != ErrorCode::CertificationFailed) throw;
        alarms.push_back(pair_name(s) + ": " + e.what());
      }
    }
    out["certificates"] = std::move(certs);
  }

  if (a.claims) {
    Json claims = Json::object();
    for (PatternName s : targets) {
      const ProofCase c = proof_case_for(s);
      if (c != ProofCase::NeighborhoodP6 && c != ProofCase::NeighborhoodZ3) continue;
      const std::optional<ClaimReport> r = connected ? block_case_claims(g, s, full_report()) : std::nullopt;
      claims[pair_name(s)] = r ? to_json(*r) : Json("not a block-case instance");
      if (r && !r->all_pass()) alarms.push_back(pair_name(s) + ": claim failed");
    }
    out["claims"] = std::move(claims);
  }

  if (a.comb) {
    Json j{{"in_class", connected && is_pair_free(g, PatternName::K1_3, PatternName::B12)}};
    const std::optional<CombDecomposition> d = connected ? recognize_generalized_comb(g) : std::nullopt;
    j["decomposition"] = d ? to_json(*d) : Json(nullptr);
    if (d) {
      const bool holds = comb_base_invariant_check(g, *d, options);
      j["cutvertices"] = d->cutvertices();
      j["base_on_every_longest_path"] = holds;
      if (!holds && d->cutvertices().size() >= 3) alarms.push_back("comb base missed by a longest path");
    }
    out["comb"] = std::move(j);
  }

  if (a.hamiltonicity) out["hamiltonicity"] = to_json(decide_hamiltonicity(g, options.dp_limit));

  if (a.theorem4) {
    const Theorem4Verdict v = check_theorem4_instance(g);
    out["theorem4"] = to_string(v);
    if (v == Theorem4Verdict::Counterexample) alarms.push_back("2-connected (K1_3, Z3)-free graph is neither Hamiltonian nor H1/H2");
  }

  if (a.theorem1) {
    Json j = Json::object();
    std::vector<PatternName> ss;
    for (PatternName s : traceable_pair_patterns())
      if (pairs.empty() || std::find(pairs.begin(), pairs.end(), s) != pairs.end()) ss.push_back(s);
    for (PatternName s : ss) {
      const TraceabilityVerdict v = check_traceability_pair_instance(g, s);
      j[pair_name(s)] = to_string(v);
      if (v == TraceabilityVerdict::Counterexample) alarms.push_back(pair_name(s) + ": connected pair-free graph is not traceable");
    }
    out["theorem1"] = std::move(j);
  }

  out["alarms"] = alarms;
  std::cout << out.dump(2) << '\n';
  return alarms.empty() ? kExitOk : kExitAlarm;
}

struct SweepArgs {
  std::string mode;
  std::string input;
  int min_n = 1;
  int max_n = 8;
  int jobs = 1;
  int k = 3;
  std::vector<std::string> pairs;
  std::string format = "json";
  bool no_claims = false;
  bool no_runtime = false;
};

int run_sweep(const SweepArgs& a, const CommonFlags& flags) {
  SweepOptions o;
  o.min_n = a.min_n;
  o.max_n = a.max_n;
  o.jobs = a.jobs;
  o.k = a.k;
  o.claims = !a.no_claims;
  o.paths = flags.options();
  for (const auto& p : a.pairs) o.pairs.push_back(parse_pair(p));
  const SweepMode mode = parse_sweep_mode(a.mode);

  SweepResult r;
  if (a.input.empty()) {
    r = sweep_builtin(mode, o);
  } else if (a.input == "-") {
    r = sweep_graph6(std::cin, mode, o);
  } else {
    std::ifstream in(a.input);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + a.input + "'");
    r = sweep_graph6(in, mode, o);
  }
  if (a.format == "csv")
    std::cout << to_csv(r);
  else
    std::cout << to_json(r, !a.no_runtime).dump(2) << '\n';
  for (const auto& m : r.decode_messages) std::cerr << "decode error: " << m << '\n';
  return r.violations.empty() ? kExitOk : kExitAlarm;
}

int run_fixtures(const std::string& name, bool list, const std::string& anchors, int base_size,
                 const std::string& format) {
  if (list || name.empty()) {
    for (const auto& n : fixture_names()) std::cout << n << '\n';
    return kExitOk;
  }
  Graph g;
  if (name == "comb" && !anchors.empty()) {
    g = build_comb(parse_comb_anchor_file(slurp(anchors), base_size)).graph;
  } else {
    g = make_fixture(name).graph;
  }
  if (format == "graph6") {
    std::cout << to_graph6(g) << '\n';
  } else {
    std::cout << to_edge_list(g) << "# graph6 " << to_graph6(g) << '\n';
  }
  return kExitOk;
}

int run_certcheck(const std::string& graph_file, const std::string& cert_file, const CommonFlags& flags) {
  const Graph g = parse_graph_text(slurp(graph_file));
  Json doc;
  try {
    doc = Json::parse(slurp(cert_file));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("certificate file: ") + e.what());
  }
  std::vector<Json> certs;
  if (doc.contains("certificates"))
    for (const auto& c : doc.at("certificates")) certs.push_back(c);
  else
    certs.push_back(doc);
  if (certs.empty()) throw Error(ErrorCode::ParseError, "no certificate in '" + cert_file + "'");

  Json results = Json::array();
  bool all_valid = true;
  for (const auto& c : certs) {
    const Certificate cert = certificate_from_json(c);
    const CertificateCheck check = check_certificate(g, cert, flags.options());
    all_valid = all_valid && check.valid;
    results.push_back(Json{{"vertex", cert.vertex},
                           {"route", to_string(cert.route)},
                           {"pair", pair_name(cert.pair)},
                           {"valid", check.valid},
                           {"failures", check.failures}});
  }
  std::cout << Json{{"schema", kReportSchema}, {"valid", all_valid}, {"results", results}}.dump(2) << '\n';
  return all_valid ? kExitOk : kExitAlarm;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest-path intersection toolkit for forbidden-pair graph classes"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_option("--paths-cap", flags.paths_cap, "Abort enumeration beyond this many longest paths")->capture_default_str();
  app.add_option("--dp-limit", flags.dp_limit, "Largest order handled by the subset table")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Analyse one graph (edge list or graph6) and print a JSON report");
  verify->add_option("input", va.input, "Graph file, '-' for stdin");
  verify->add_option("--fixture", va.fixture, "Use a named fixture instead of a file");
  verify->add_option("--pair", va.pairs, "Restrict to pairs such as K1_3:P6 (repeatable)");
  verify->add_flag("--gallai", va.gallai, "Longest-path intersection (default when no check is given)");
  verify->add_flag("--classify", va.classify, "List the (K1_3, S) classes the graph belongs to");
  verify->add_flag("--certify", va.certify, "Certified common vertex per pair");
  verify->add_flag("--claims", va.claims, "Block-case claim diagnostics");
  verify->add_flag("--comb", va.comb, "Generalized comb recognition and base invariant");
  verify->add_flag("--hamiltonicity", va.hamiltonicity, "Hamiltonian cycle and path with witnesses");
  verify->add_flag("--theorem4", va.theorem4, "2-connected (K1_3, Z3)-free dichotomy check");
  verify->add_flag("--theorem1", va.theorem1, "Traceability check for the traceable pairs");
  verify->add_flag("--blocks", va.blocks, "Block-cutvertex tree");
  verify->add_flag("--emit-paths", va.emit_paths, "Include every longest path");
  verify->add_option("--k-tuple", va.k_tuple, "Check every k longest paths for a common vertex")->check(CLI::Range(2, 64));

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Scan a graph6 stream or the builtin enumerator");
  sweep->add_option("--mode", sa.mode, "gallai-minimum | theorem1 | theorem4 | theorem5 | problem2")->required();
  sweep->add_option("--input", sa.input, "graph6 file, '-' for stdin; default: builtin enumerator");
  sweep->add_option("--min-n", sa.min_n, "Smallest order")->capture_default_str();
  sweep->add_option("--max-n", sa.max_n, "Largest order")->capture_default_str();
  sweep->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  sweep->add_option("--pair", sa.pairs, "Restrict to pairs such as K1_3:P6 (repeatable)");
  sweep->add_option("--k", sa.k, "Tuple size for problem2")->check(CLI::Range(2, 64))->capture_default_str();
  sweep->add_option("--format", sa.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sweep->add_flag("--no-claims", sa.no_claims, "Skip claim diagnostics in theorem5 mode");
  sweep->add_flag("--no-runtime", sa.no_runtime, "Omit runtime from the JSON summary");

  std::string fixture_name, anchors, fixture_format = "edgelist";
  bool list = false;
  int base_size = 0;
  auto* fixtures = app.add_subcommand("fixtures", "Print a named graph as an edge list plus graph6");
  fixtures->add_option("name", fixture_name, "Fixture name, e.g. wvz12, h1, comb:3;5;1,1,1;2,2,2");
  fixtures->add_flag("--list", list, "List fixture names");
  fixtures->add_option("--anchors", anchors, "Anchor file for 'comb' with irregular anchor sets");
  fixtures->add_option("--base-size", base_size, "Base size for --anchors");
  fixtures->add_option("--format", fixture_format, "edgelist | graph6")->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string graph_file, cert_file;
  auto* certcheck = app.add_subcommand("certcheck", "Replay stored certificates against a graph");
  certcheck->add_option("graph", graph_file, "Graph file")->required();
  certcheck->add_option("certificate", cert_file, "Certificate JSON or a verify report")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return run_verify(va, flags);
    if (*sweep) return run_sweep(sa, flags);
    if (*fixtures) return run_fixtures(fixture_name, list, anchors, base_size, fixture_format);
    if (*certcheck) return run_certcheck(graph_file, cert_file, flags);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
