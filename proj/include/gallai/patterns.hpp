#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

enum class PatternName { K1_3, C3, P4, P5, P6, Z1, Z2, Z3, B11, B12, N111, TwoK2 };

std::string_view to_string(PatternName name);
// Accepts the exact CLI spellings ("K1_3", "P6", "TwoK2", ...).
PatternName parse_pattern_name(std::string_view text);

struct Pattern {
  PatternName name;
  Graph graph;
  // The forbidden-pair theorems are stated for connected patterns only.
  bool connected = true;
};

// Triangle on vertices 0,1,2 with pendant paths of k, l, m edges hanging off
// 0, 1, 2 respectively.
Graph build_N(int k, int l, int m);
Graph path_graph(int order);
Graph cycle_graph(int order);
Graph complete_graph(int order);
Graph star_graph(int leaves);

const Pattern& pattern(PatternName name);
std::span<const PatternName> catalog();

// The second members S of the pairs (K1_3, S) in the longest-path theorem,
// and the pairs of the traceability theorem.
std::span<const PatternName> hamiltonian_pair_patterns();
std::span<const PatternName> traceable_pair_patterns();

// Embedding phi with uv in E(p) <=> phi(u)phi(v) in E(g). Returns the first
// embedding in a fixed search order, or nullopt.
using Embedding = std::vector<Vertex>;
std::optional<Embedding> contains_induced(const Graph& g, const Graph& p);
inline std::optional<Embedding> contains_induced(const Graph& g, const Pattern& p) { return contains_induced(g, p.graph); }
bool is_induced_embedding(const Graph& g, const Graph& p, std::span<const Vertex> phi);

bool is_free_of(const Graph& g, PatternName name);
bool is_pair_free(const Graph& g, PatternName r, PatternName s);

// Patterns S from hamiltonian_pair_patterns() with g (K1_3, S)-free, checked
// against the subgraph order of the catalog. Throws Error(InvalidArgument)
// if the containment order is violated, which would indicate an engine bug.
std::vector<PatternName> classify_hamiltonian_pairs(const Graph& g);

}  // namespace gallai
