#pragma once

#include <cstdint>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

inline constexpr int kMaxBuiltinOrder = 9;

// One canonical representative per isomorphism class of connected graphs on
// n vertices, as upper-triangle codes (see pack_upper_triangle), sorted.
// Every connected graph has a non-cutvertex, so the order-n classes are
// reached by attaching a new vertex to each order-(n-1) class with every
// nonempty neighbourhood, then deduplicating canonical codes.
// Throws SizeLimitExceeded above kMaxBuiltinOrder.
std::vector<std::uint64_t> enumerate_connected_codes(int n);

Graph decode_graph(std::uint64_t code, int n);
std::vector<Graph> builtin_enumerate_connected(int n);

}  // namespace gallai
