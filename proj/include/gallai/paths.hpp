#pragma once

#include <cstdint>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

struct PathOptions {
  // Graphs up to this order use the subset table; larger ones fall back to
  // budgeted depth-first search.
  int dp_limit = 24;
  std::uint64_t path_cap = 1'000'000;
  std::uint64_t dfs_budget = 1'000'000'000;

  // Defaults with GALLAI_BUDGET (if set) overriding dfs_budget.
  static PathOptions from_environment();
};

struct LongestPathReport {
  int length = 0;                  // edges
  std::vector<VertexPath> paths;   // sorted, one per undirected path
  VertexMask intersection = 0;     // vertices on every reported path

  std::size_t path_count() const noexcept { return paths.size(); }
  std::vector<Vertex> intersection_vertices() const { return mask_to_vector(intersection); }
};

int longest_path_length(const Graph& g, const PathOptions& options = {});

// Vertices common to all longest paths. On the table route this is the AND
// of every vertex set carrying a path of maximum order, with no enumeration.
VertexMask longest_path_intersection(const Graph& g, const PathOptions& options = {});

// Complete enumeration. Throws PathCapExceeded / BudgetExceeded rather than
// truncating.
LongestPathReport enumerate_longest_paths(const Graph& g, const PathOptions& options = {});

struct GallaiVerdict {
  enum class Kind { HasCommonVertex, Empty };
  Kind kind = Kind::HasCommonVertex;
  int length = 0;
  std::vector<Vertex> intersection;  // nonempty iff HasCommonVertex
  std::vector<VertexPath> witness;   // inclusion-minimal family with empty intersection
};

// Throws DisconnectedInput for disconnected graphs and InvalidArgument for
// the empty graph.
GallaiVerdict gallai_check(const Graph& g, const PathOptions& options = {});

// Smallest subfamily with empty intersection (one path per distinct vertex
// set). Starts from a greedy front-to-back reduction and improves it by
// exact search under a fixed node budget, so the result is always
// inclusion-minimal and minimum whenever the search completes.
std::vector<VertexPath> reduce_witness_family(const std::vector<VertexPath>& family);

struct KTupleVerdict {
  enum class Kind { AllKTuplesIntersect, CounterTuple };
  Kind kind = Kind::AllKTuplesIntersect;
  std::vector<VertexPath> tuple;        // the k paths when CounterTuple
  std::size_t distinct_vertex_sets = 0;  // tuples are scanned over these
  std::uint64_t tuples_checked = 0;
};

inline constexpr std::uint64_t kDefaultTupleBudget = 2'000'000'000ULL;

KTupleVerdict k_tuple_intersection_check(const LongestPathReport& report, int k,
                                         std::uint64_t tuple_budget = kDefaultTupleBudget);
KTupleVerdict k_tuple_intersection_check(const Graph& g, int k, const PathOptions& options = {},
                                         std::uint64_t tuple_budget = kDefaultTupleBudget);

}  // namespace gallai
