#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

inline constexpr int kMaxCanonicalOrder = 32;
inline constexpr int kDefaultIsomorphismBound = 12;

using SmallRows = std::array<std::uint32_t, kMaxCanonicalOrder>;

// Canonical labeling by individualization/refinement. The canonical graph is
// the lexicographically smallest relabeled adjacency-row sequence over the
// explored leaves; twin vertices in a target cell are explored only once.
struct CanonicalForm {
  std::vector<Vertex> labeling;  // labeling[v] = canonical label of v
  std::vector<std::uint32_t> rows;  // adjacency rows of the canonical graph
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

// Allocation-free variant for the enumerator: fills `labeling` and returns
// the canonical rows.
SmallRows canonical_rows(const SmallRows& rows, int n, std::array<std::uint8_t, kMaxCanonicalOrder>& labeling);

// Upper-triangle bit code of rows (n <= 11), graph6 bit order.
std::uint64_t pack_upper_triangle(const SmallRows& rows, int n);
Graph unpack_upper_triangle(std::uint64_t code, int n);

// Throws SizeLimitExceeded if either graph exceeds max_order.
bool are_isomorphic(const Graph& g, const Graph& h, int max_order = kDefaultIsomorphismBound);

}  // namespace gallai
