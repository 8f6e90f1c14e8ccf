#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

inline constexpr int kMaxTableOrder = 30;

// Held-Karp style reachability over (vertex subset, endpoint) states:
// ends(S) holds every v such that some path with vertex set exactly S ends
// at v. With a fixed start, only paths beginning at that vertex count.
// Memory is 4 * 2^n bytes.
class SubsetPathTable {
 public:
  using Subset = std::uint32_t;

  explicit SubsetPathTable(const Graph& g, std::optional<Vertex> start = std::nullopt);

  int order() const noexcept { return n_; }
  Subset ends(Subset s) const { return ends_[s]; }
  std::size_t subset_count() const noexcept { return ends_.size(); }

  // Largest |S| with a path on exactly S (0 for the empty graph).
  int max_vertex_count() const noexcept { return max_vertices_; }

  // A path with vertex set `s` that ends at `end`, listed from its start.
  // Requires end in ends(s).
  std::vector<Vertex> trace(Subset s, Vertex end) const;

  // Candidate predecessors of `end` in a path on `s` ending at `end`.
  Subset predecessors(Subset s, Vertex end) const;

 private:
  int n_ = 0;
  std::vector<Subset> adj_;
  std::vector<Subset> ends_;
  int max_vertices_ = 0;
};

}  // namespace gallai
