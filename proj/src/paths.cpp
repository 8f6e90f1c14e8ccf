#include "gallai/paths.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>

#include "gallai/error.hpp"
#include "gallai/path_table.hpp"

namespace gallai {

namespace {

using Subset = SubsetPathTable::Subset;

bool use_table(const Graph& g, const PathOptions& options) {
  return g.order() <= std::min(options.dp_limit, kMaxTableOrder);
}

void require_masks(const Graph& g) {
  if (!g.has_masks()) throw Error(ErrorCode::SizeLimitExceeded, "exact path routines limited to 64 vertices");
}

class TableEnumerator {
 public:
  TableEnumerator(const SubsetPathTable& table, const PathOptions& options) : table_(table), options_(options) {}

  std::vector<VertexPath> run(int vertex_count) {
    for (std::size_t s = 1; s < table_.subset_count(); ++s) {
      const Subset mask = static_cast<Subset>(s);
      if (std::popcount(mask) != vertex_count) continue;
      for (Subset e = table_.ends(mask); e; e &= e - 1) {
        stack_.assign(1, std::countr_zero(e));
        walk(mask);
      }
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  // stack_ holds the path from its end back to the current vertex.
  void walk(Subset mask) {
    if (++expansions_ > options_.dfs_budget)
      throw Error(ErrorCode::BudgetExceeded, "expansion budget " + std::to_string(options_.dfs_budget) + " exhausted");
    const Vertex current = stack_.back();
    if (std::popcount(mask) == 1) {
      if (stack_.size() == 1 || stack_.front() > stack_.back()) emit();
      return;
    }
    const Subset rest = mask & ~(Subset{1} << current);
    for (Subset pred = table_.predecessors(mask, current); pred; pred &= pred - 1) {
      stack_.push_back(std::countr_zero(pred));
      walk(rest);
      stack_.pop_back();
    }
  }

  void emit() {
    if (out_.size() >= options_.path_cap)
      throw Error(ErrorCode::PathCapExceeded, "more than " + std::to_string(options_.path_cap) + " longest paths");
    out_.emplace_back(std::vector<Vertex>(stack_.rbegin(), stack_.rend()));
  }

  const SubsetPathTable& table_;
  const PathOptions& options_;
  std::vector<Vertex> stack_;
  std::vector<VertexPath> out_;
  std::uint64_t expansions_ = 0;
};

// Branch and bound over simple paths for graphs beyond the table limit. The
// bound is |path| plus the number of unvisited vertices reachable from the
// current end through unvisited vertices.
class DfsEnumerator {
 public:
  DfsEnumerator(const Graph& g, const PathOptions& options) : g_(g), options_(options) {}

  int longest_vertex_count() {
    best_ = g_.order() > 0 ? 1 : 0;
    for (Vertex s = 0; s < g_.order() && best_ < g_.order(); ++s) {
      path_.assign(1, s);
      search_longest(bit(s));
    }
    return best_;
  }

  std::vector<VertexPath> enumerate(int vertex_count) {
    target_ = vertex_count;
    for (Vertex s = 0; s < g_.order(); ++s) {
      path_.assign(1, s);
      search_all(bit(s));
    }
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void tick() {
    if (++expansions_ > options_.dfs_budget)
      throw Error(ErrorCode::BudgetExceeded, "expansion budget " + std::to_string(options_.dfs_budget) + " exhausted");
  }

  int reachable(Vertex from, VertexMask visited) const {
    const VertexMask open = ~visited & full_mask(g_.order());
    VertexMask seen = 0;
    VertexMask frontier = g_.mask(from) & open;
    while (frontier) {
      seen |= frontier;
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g_.mask(lowest(f));
      frontier = next & open & ~seen;
    }
    return popcount(seen);
  }

  void search_longest(VertexMask visited) {
    tick();
    const int here = static_cast<int>(path_.size());
    best_ = std::max(best_, here);
    const Vertex v = path_.back();
    if (here + reachable(v, visited) <= best_) return;
    for (VertexMask next = g_.mask(v) & ~visited; next; next &= next - 1) {
      const Vertex w = lowest(next);
      path_.push_back(w);
      search_longest(visited | bit(w));
      path_.pop_back();
      if (best_ == g_.order()) return;
    }
  }

  void search_all(VertexMask visited) {
    tick();
    const int here = static_cast<int>(path_.size());
    if (here == target_) {
      if (here == 1 || path_.front() < path_.back()) {
        if (out_.size() >= options_.path_cap)
          throw Error(ErrorCode::PathCapExceeded, "more than " + std::to_string(options_.path_cap) + " longest paths");
        out_.emplace_back(path_);
      }
      return;
    }
    const Vertex v = path_.back();
    if (here + reachable(v, visited) < target_) return;
    for (VertexMask next = g_.mask(v) & ~visited; next; next &= next - 1) {
      const Vertex w = lowest(next);
      path_.push_back(w);
      search_all(visited | bit(w));
      path_.pop_back();
    }
  }

  const Graph& g_;
  const PathOptions& options_;
  std::vector<Vertex> path_;
  std::vector<VertexPath> out_;
  int best_ = 0;
  int target_ = 0;
  std::uint64_t expansions_ = 0;
};

VertexMask intersect_all(const std::vector<VertexPath>& paths) {
  if (paths.empty()) return 0;
  VertexMask acc = ~VertexMask{0};
  for (const auto& p : paths) acc &= p.mask();
  return acc;
}

void require_connected(const Graph& g) {
  if (g.order() == 0) throw Error(ErrorCode::InvalidArgument, "empty graph");
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "graph is not connected");
}

}  // namespace

PathOptions PathOptions::from_environment() {
  PathOptions options;
  if (const char* env = std::getenv("GALLAI_BUDGET")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw Error(ErrorCode::InvalidArgument, "GALLAI_BUDGET must be a nonnegative integer");
    options.dfs_budget = value;
  }
  return options;
}

int longest_path_length(const Graph& g, const PathOptions& options) {
  require_masks(g);
  if (g.order() == 0) return 0;
  if (use_table(g, options)) return SubsetPathTable(g).max_vertex_count() - 1;
  return DfsEnumerator(g, options).longest_vertex_count() - 1;
}

VertexMask longest_path_intersection(const Graph& g, const PathOptions& options) {
  require_masks(g);
  if (g.order() == 0) return 0;
  if (!use_table(g, options)) return enumerate_longest_paths(g, options).intersection;
  const SubsetPathTable table(g);
  const int target = table.max_vertex_count();
  Subset acc = ~Subset{0};
  for (std::size_t s = 1; s < table.subset_count(); ++s)
    if (table.ends(static_cast<Subset>(s)) && std::popcount(static_cast<Subset>(s)) == target) acc &= static_cast<Subset>(s);
  return acc;
}

LongestPathReport enumerate_longest_paths(const Graph& g, const PathOptions& options) {
  require_masks(g);
  LongestPathReport report;
  if (g.order() == 0) return report;
  if (use_table(g, options)) {
    const SubsetPathTable table(g);
    const int count = table.max_vertex_count();
    report.length = count - 1;
    report.paths = TableEnumerator(table, options).run(count);
  } else {
    DfsEnumerator search(g, options);
    const int count = search.longest_vertex_count();
    report.length = count - 1;
    report.paths = DfsEnumerator(g, options).enumerate(count);
  }
  report.intersection = intersect_all(report.paths);
  return report;
}

namespace {

// Depth-limited search for `depth` sets whose AND is empty. Branches on the
// lowest vertex still common to the chosen sets.
bool cover_search(const std::vector<VertexMask>& masks, VertexMask common, int depth, std::vector<std::size_t>& chosen,
                  std::uint64_t& budget) {
  if (common == 0) return true;
  if (depth == 0 || budget == 0) return false;
  --budget;
  const VertexMask v = bit(lowest(common));
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (masks[i] & v) continue;
    chosen.push_back(i);
    if (cover_search(masks, common & masks[i], depth - 1, chosen, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::vector<VertexPath> reduce_witness_family(const std::vector<VertexPath>& family) {
  std::vector<VertexPath> kept;
  std::vector<VertexMask> masks;
  for (const auto& p : family) {
    const VertexMask m = p.mask();
    if (std::find(masks.begin(), masks.end(), m) != masks.end()) continue;
    masks.push_back(m);
    kept.push_back(p);
  }
  VertexMask all = ~VertexMask{0};
  for (VertexMask m : masks) all &= m;
  if (all != 0 || kept.size() <= 1) return kept;

  // Greedy: drop front to back while the intersection stays empty.
  std::vector<std::size_t> greedy;
  for (std::size_t i = 0; i < kept.size(); ++i) greedy.push_back(i);
  for (std::size_t i = 0; i < greedy.size();) {
    VertexMask rest = ~VertexMask{0};
    for (std::size_t j = 0; j < greedy.size(); ++j)
      if (j != i) rest &= masks[greedy[j]];
    if (rest == 0)
      greedy.erase(greedy.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }

  // Then look for a strictly smaller family by iterative deepening.
  std::vector<std::size_t> best = greedy;
  std::uint64_t budget = 5'000'000;
  for (int depth = 1; depth < static_cast<int>(best.size()) && budget > 0; ++depth) {
    std::vector<std::size_t> chosen;
    if (cover_search(masks, ~VertexMask{0}, depth, chosen, budget)) {
      std::sort(chosen.begin(), chosen.end());
      best = chosen;
      break;
    }
  }
  std::vector<VertexPath> out;
  for (std::size_t i : best) out.push_back(kept[i]);
  return out;
}

GallaiVerdict gallai_check(const Graph& g, const PathOptions& options) {
  require_connected(g);
  GallaiVerdict verdict;
  const VertexMask common = longest_path_intersection(g, options);
  if (common) {
    verdict.kind = GallaiVerdict::Kind::HasCommonVertex;
    verdict.length = longest_path_length(g, options);
    verdict.intersection = mask_to_vector(common);
    return verdict;
  }
  const LongestPathReport report = enumerate_longest_paths(g, options);
  verdict.kind = GallaiVerdict::Kind::Empty;
  verdict.length = report.length;
  verdict.witness = reduce_witness_family(report.paths);
  return verdict;
}

KTupleVerdict k_tuple_intersection_check(const LongestPathReport& report, int k, std::uint64_t tuple_budget) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  KTupleVerdict verdict;
  std::vector<VertexMask> masks;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < report.paths.size(); ++i) {
    const VertexMask m = report.paths[i].mask();
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) {
      masks.push_back(m);
      representative.push_back(i);
    }
  }
  verdict.distinct_vertex_sets = masks.size();
  const std::size_t d = masks.size();
  const auto ku = static_cast<std::size_t>(k);

  // Fewer distinct vertex sets than k: the whole family is the only tuple
  // shape left to test (duplicates do not change an intersection).
  if (d < ku) {
    verdict.tuples_checked = 1;
    VertexMask acc = ~VertexMask{0};
    for (VertexMask m : masks) acc &= m;
    if (d > 0 && acc == 0) {
      verdict.kind = KTupleVerdict::Kind::CounterTuple;
      std::vector<char> taken(report.paths.size(), 0);
      for (std::size_t r : representative) {
        verdict.tuple.push_back(report.paths[r]);
        taken[r] = 1;
      }
      for (std::size_t i = 0; i < report.paths.size() && verdict.tuple.size() < ku; ++i)
        if (!taken[i]) verdict.tuple.push_back(report.paths[i]);
    }
    return verdict;
  }

  // C(d, k) against the budget, saturating.
  long double space = 1;
  for (std::size_t i = 0; i < ku; ++i) space = space * static_cast<long double>(d - i) / static_cast<long double>(i + 1);
  if (space > static_cast<long double>(tuple_budget))
    throw Error(ErrorCode::TupleSpaceExceeded, "C(" + std::to_string(d) + "," + std::to_string(k) + ") exceeds budget");

  std::vector<std::size_t> chosen;
  // Returns true once a counter tuple has been recorded.
  auto scan = [&](auto&& self, std::size_t from, VertexMask acc) -> bool {
    if (chosen.size() == ku) {
      ++verdict.tuples_checked;
      return acc == 0;
    }
    for (std::size_t i = from; i + (ku - chosen.size()) <= d; ++i) {
      chosen.push_back(i);
      if (self(self, i + 1, acc & masks[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (scan(scan, 0, ~VertexMask{0})) {
    verdict.kind = KTupleVerdict::Kind::CounterTuple;
    for (std::size_t i : chosen) verdict.tuple.push_back(report.paths[representative[i]]);
  }
  return verdict;
}

KTupleVerdict k_tuple_intersection_check(const Graph& g, int k, const PathOptions& options,
                                         std::uint64_t tuple_budget) {
  require_connected(g);
  return k_tuple_intersection_check(enumerate_longest_paths(g, options), k, tuple_budget);
}

}  // namespace gallai
