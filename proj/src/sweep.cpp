#include "gallai/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <sstream>
#include <thread>

#include "gallai/enumerate.hpp"
#include "gallai/error.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/hamiltonicity.hpp"
#include "gallai/proof_engine.hpp"

namespace gallai {

namespace {

constexpr std::array kModeNames{"gallai-minimum", "theorem1", "theorem4", "theorem5", "problem2"};

std::string pair_key(PatternName s) { return "K1_3:" + std::string(to_string(s)); }

struct Tally {
  std::map<int, SweepOrderSummary> orders;
  std::vector<SweepViolation> violations;
  std::vector<SweepViolation> findings;

  void merge(Tally&& other) {
    for (auto& [n, o] : other.orders) {
      SweepOrderSummary& mine = orders[n];
      mine.n = n;
      mine.total += o.total;
      for (const auto& [k, v] : o.in_class) mine.in_class[k] += v;
      for (const auto& [k, v] : o.outcomes) mine.outcomes[k] += v;
    }
    std::move(other.violations.begin(), other.violations.end(), std::back_inserter(violations));
    std::move(other.findings.begin(), other.findings.end(), std::back_inserter(findings));
  }
};

class Evaluator {
 public:
  Evaluator(SweepMode mode, const SweepOptions& options) : mode_(mode), options_(options) {
    if (options_.pairs.empty()) {
      if (mode == SweepMode::Theorem1) {
        auto span = traceable_pair_patterns();
        pairs_.assign(span.begin(), span.end());
      } else {
        auto span = hamiltonian_pair_patterns();
        pairs_.assign(span.begin(), span.end());
      }
    } else {
      pairs_ = options_.pairs;
    }
  }

  void operator()(std::size_t index, const Graph& g, Tally& tally) const {
    SweepOrderSummary& order = tally.orders[g.order()];
    order.n = g.order();
    ++order.total;
    Context ctx{index, g, order, tally, std::nullopt, std::nullopt};
    try {
      switch (mode_) {
        case SweepMode::GallaiMinimum: gallai_minimum(ctx); break;
        case SweepMode::Theorem1: theorem1(ctx); break;
        case SweepMode::Theorem4: theorem4(ctx); break;
        case SweepMode::Theorem5: theorem5(ctx); break;
        case SweepMode::Problem2: problem2(ctx); break;
      }
    } catch (const Error& e) {
      ++order.outcomes["error"];
      violate(ctx, "", std::string("ERROR ") + e.what());
    }
  }

 private:
  struct Context {
    std::size_t index;
    const Graph& g;
    SweepOrderSummary& order;
    Tally& tally;
    std::optional<LongestPathReport> report;
    std::optional<std::string> graph6;

    const std::string& code() {
      if (!graph6) graph6 = to_graph6(g);
      return *graph6;
    }
  };

  static void violate(Context& ctx, std::string pair, std::string verdict) {
    ctx.tally.violations.push_back({ctx.index, ctx.code(), std::move(pair), std::move(verdict)});
  }
  static void record(Context& ctx, std::string pair, std::string verdict) {
    ctx.tally.findings.push_back({ctx.index, ctx.code(), std::move(pair), std::move(verdict)});
  }

  const LongestPathReport& report(Context& ctx) const {
    if (!ctx.report) ctx.report = enumerate_longest_paths(ctx.g, options_.paths);
    return *ctx.report;
  }

  static bool connected(Context& ctx) {
    if (ctx.g.order() > 0 && is_connected(ctx.g)) return true;
    ++ctx.order.outcomes["disconnected"];
    return false;
  }

  void gallai_minimum(Context& ctx) const {
    if (!connected(ctx)) return;
    if (longest_path_intersection(ctx.g, options_.paths)) {
      ++ctx.order.outcomes["nonempty"];
      return;
    }
    ++ctx.order.outcomes["empty"];
    // Below 12 vertices an empty intersection contradicts the known minimum.
    if (ctx.g.order() < 12)
      violate(ctx, "", "EMPTY_INTERSECTION");
    else
      record(ctx, "", "EMPTY_INTERSECTION");
  }

  void theorem1(Context& ctx) const {
    if (!connected(ctx) || !is_free_of(ctx.g, PatternName::K1_3)) return;
    std::optional<bool> traceable;
    for (PatternName s : pairs_) {
      if (!is_free_of(ctx.g, s)) continue;
      const std::string key = pair_key(s);
      ++ctx.order.in_class[key];
      if (!traceable) traceable = is_traceable(ctx.g, options_.paths.dp_limit);
      if (*traceable) {
        ++ctx.order.outcomes[key + ":traceable"];
      } else {
        ++ctx.order.outcomes[key + ":COUNTEREXAMPLE"];
        violate(ctx, key, "COUNTEREXAMPLE");
      }
    }
  }

  static void theorem4(Context& ctx) {
    const Theorem4Verdict v = check_theorem4_instance(ctx.g);
    ++ctx.order.outcomes[std::string(to_string(v))];
    if (v != Theorem4Verdict::NotInClass) ++ctx.order.in_class[pair_key(PatternName::Z3)];
    if (v == Theorem4Verdict::Counterexample) violate(ctx, pair_key(PatternName::Z3), "COUNTEREXAMPLE");
  }

  void theorem5(Context& ctx) const {
    if (!connected(ctx) || !is_free_of(ctx.g, PatternName::K1_3)) return;
    std::optional<VertexMask> common;
    for (PatternName s : pairs_) {
      if (!is_free_of(ctx.g, s)) continue;
      const std::string key = pair_key(s);
      ++ctx.order.in_class[key];
      if (!common) common = longest_path_intersection(ctx.g, options_.paths);
      if (!*common) {
        violate(ctx, key, "EMPTY_INTERSECTION");
        continue;
      }
      try {
        const bool traceable = longest_path_length(ctx.g, options_.paths) == ctx.g.order() - 1;
        const Certificate cert = traceable ? certified_common_vertex(ctx.g, s, options_.paths)
                                           : certified_common_vertex(ctx.g, s, report(ctx), options_.paths);
        ++ctx.order.outcomes["route:" + std::string(to_string(cert.route))];
        if (!(*common & bit(cert.vertex))) violate(ctx, key, "CERTIFIED_VERTEX_OFF_PATH");
        const CertificateCheck replay = check_certificate(ctx.g, cert, options_.paths);
        if (!replay.valid) violate(ctx, key, "CERTIFICATE_REPLAY " + replay.failures.front());
      } catch (const Error& e) {
        if (e.code() != ErrorCode::CertificationFailed) throw;
        ++ctx.order.outcomes["certification_failed"];
        violate(ctx, key, e.what());
      }
      if (options_.claims && ctx.g.order() - 1 != longest_path_length(ctx.g, options_.paths)) {
        const std::optional<ClaimReport> claims = block_case_claims(ctx.g, s, report(ctx));
        if (claims) {
          ++ctx.order.outcomes["block_case_instances"];
          if (!claims->all_pass()) {
            std::string failed;
            for (const auto& c : claims->claims)
              if (c.status == ClaimStatus::Fail) failed += (failed.empty() ? "" : ",") + c.name;
            violate(ctx, key, "CLAIM_FAILED " + failed);
          }
        }
      }
    }
  }

  void problem2(Context& ctx) const {
    if (!connected(ctx)) return;
    if (longest_path_intersection(ctx.g, options_.paths)) {
      ++ctx.order.outcomes["common_vertex"];
      return;
    }
    const KTupleVerdict v = k_tuple_intersection_check(report(ctx), options_.k, options_.tuple_budget);
    if (v.kind == KTupleVerdict::Kind::AllKTuplesIntersect) {
      ++ctx.order.outcomes["all_k_tuples_intersect"];
    } else {
      ++ctx.order.outcomes["counter_tuple"];
      record(ctx, "", "COUNTER_TUPLE k=" + std::to_string(options_.k));
    }
  }

  SweepMode mode_;
  SweepOptions options_;
  std::vector<PatternName> pairs_;
};

// Pulls item indices in chunks; Source(i) yields graph i.
template <class Source>
Tally run_parallel(std::size_t count, int jobs, const Evaluator& eval, const Source& source) {
  constexpr std::size_t kChunk = 512;
  std::atomic<std::size_t> next{0};
  const int workers = std::max(1, jobs);
  std::vector<Tally> tallies(static_cast<std::size_t>(workers));
  auto work = [&](Tally& tally) {
    for (;;) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= count) return;
      const std::size_t end = std::min(count, begin + kChunk);
      for (std::size_t i = begin; i < end; ++i) eval(i, source(i), tally);
    }
  };
  if (workers == 1) {
    work(tallies.front());
  } else {
    std::vector<std::thread> threads;
    for (auto& t : tallies) threads.emplace_back(work, std::ref(t));
    for (auto& t : threads) t.join();
  }
  Tally merged;
  for (auto& t : tallies) merged.merge(std::move(t));
  auto by_position = [](const SweepViolation& a, const SweepViolation& b) {
    return std::tie(a.index, a.pair, a.verdict) < std::tie(b.index, b.pair, b.verdict);
  };
  std::sort(merged.violations.begin(), merged.violations.end(), by_position);
  std::sort(merged.findings.begin(), merged.findings.end(), by_position);
  return merged;
}

SweepResult finish(SweepMode mode, Tally&& tally, std::chrono::steady_clock::time_point start) {
  SweepResult r;
  r.mode = mode;
  for (auto& [n, o] : tally.orders) r.orders.push_back(std::move(o));
  r.violations = std::move(tally.violations);
  r.findings = std::move(tally.findings);
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::string_view to_string(SweepMode m) { return kModeNames[static_cast<std::size_t>(m)]; }

SweepMode parse_sweep_mode(std::string_view text) {
  for (std::size_t i = 0; i < kModeNames.size(); ++i)
    if (text == kModeNames[i]) return static_cast<SweepMode>(i);
  throw Error(ErrorCode::InvalidArgument, "unknown sweep mode '" + std::string(text) + "'");
}

std::uint64_t SweepResult::total() const {
  std::uint64_t t = 0;
  for (const auto& o : orders) t += o.total;
  return t;
}

std::uint64_t SweepResult::outcome(std::string_view key) const {
  std::uint64_t t = 0;
  for (const auto& o : orders)
    if (auto it = o.outcomes.find(std::string(key)); it != o.outcomes.end()) t += it->second;
  return t;
}

std::uint64_t SweepResult::in_class(std::string_view pair) const {
  std::uint64_t t = 0;
  for (const auto& o : orders)
    if (auto it = o.in_class.find(std::string(pair)); it != o.in_class.end()) t += it->second;
  return t;
}

SweepResult sweep_builtin(SweepMode mode, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.min_n < 1 || options.max_n < options.min_n)
    throw Error(ErrorCode::InvalidArgument, "need 1 <= min_n <= max_n");
  std::vector<std::pair<int, std::uint64_t>> items;
  for (int n = options.min_n; n <= options.max_n; ++n)
    for (std::uint64_t code : enumerate_connected_codes(n)) items.emplace_back(n, code);
  const Evaluator eval(mode, options);
  Tally tally = run_parallel(items.size(), options.jobs, eval, [&](std::size_t i) {
    return decode_graph(items[i].second, items[i].first);
  });
  for (int n = options.min_n; n <= options.max_n; ++n) tally.orders[n].n = n;
  return finish(mode, std::move(tally), start);
}

SweepResult sweep_graphs(const std::vector<Graph>& graphs, SweepMode mode, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Evaluator eval(mode, options);
  Tally tally = run_parallel(graphs.size(), options.jobs, eval, [&](std::size_t i) -> const Graph& { return graphs[i]; });
  return finish(mode, std::move(tally), start);
}

SweepResult sweep_graph6(std::istream& in, SweepMode mode, const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  std::vector<std::string> errors;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      if (g.order() >= options.min_n && g.order() <= options.max_n) graphs.push_back(std::move(g));
    } catch (const Error& e) {
      errors.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  SweepResult r = sweep_graphs(graphs, mode, options);
  r.decode_errors = errors.size();
  r.decode_messages = std::move(errors);
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const SweepResult& r, bool with_runtime) {
  Json orders = Json::array();
  for (const auto& o : r.orders)
    orders.push_back(Json{{"n", o.n}, {"total", o.total}, {"in_class", o.in_class}, {"outcomes", o.outcomes}});
  auto list = [](const std::vector<SweepViolation>& vs) {
    Json out = Json::array();
    for (const auto& v : vs)
      out.push_back(Json{{"index", v.index}, {"graph6", v.graph6}, {"pair", v.pair}, {"verdict", v.verdict}});
    return out;
  };
  Json j{{"schema", kReportSchema},
         {"mode", to_string(r.mode)},
         {"total", r.total()},
         {"orders", std::move(orders)},
         {"violations", list(r.violations)},
         {"findings", list(r.findings)},
         {"decode_errors", Json{{"count", r.decode_errors}, {"messages", r.decode_messages}}}};
  if (with_runtime) j["runtime_seconds"] = r.runtime_seconds;
  return j;
}

std::string to_csv(const SweepResult& r) {
  std::ostringstream out;
  out << "n,key,count\n";
  for (const auto& o : r.orders) {
    out << o.n << ",total," << o.total << '\n';
    for (const auto& [k, v] : o.in_class) out << o.n << ",in_class:" << k << ',' << v << '\n';
    for (const auto& [k, v] : o.outcomes) out << o.n << ',' << k << ',' << v << '\n';
  }
  for (const auto& v : r.violations) out << "violation," << v.graph6 << ',' << v.pair << ',' << v.verdict << '\n';
  for (const auto& v : r.findings) out << "finding," << v.graph6 << ',' << v.pair << ',' << v.verdict << '\n';
  if (r.decode_errors) out << "decode_errors,," << r.decode_errors << '\n';
  return out.str();
}

}  // namespace gallai
