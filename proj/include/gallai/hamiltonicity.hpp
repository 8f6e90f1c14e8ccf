#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

inline constexpr int kDefaultHamiltonicityBound = 24;

struct HamiltonicityVerdict {
  bool hamiltonian = false;
  bool traceable = false;
  std::optional<std::vector<Vertex>> cycle;  // closing edge back->front implied
  std::optional<VertexPath> path;
};

// Exact subset-table decisions with witnesses. A Hamiltonian cycle needs at
// least 3 vertices; K1 and K2 are traceable but not Hamiltonian.
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g, int max_order = kDefaultHamiltonicityBound);
std::optional<VertexPath> hamiltonian_path(const Graph& g, int max_order = kDefaultHamiltonicityBound);
bool is_hamiltonian(const Graph& g, int max_order = kDefaultHamiltonicityBound);
bool is_traceable(const Graph& g, int max_order = kDefaultHamiltonicityBound);
HamiltonicityVerdict decide_hamiltonicity(const Graph& g, int max_order = kDefaultHamiltonicityBound);

enum class Theorem4Verdict { NotInClass, Hamiltonian, IsoH1, IsoH2, Counterexample };
std::string_view to_string(Theorem4Verdict v);

// 2-connected (K1_3, Z3)-free graphs are Hamiltonian or one of H1, H2.
Theorem4Verdict check_theorem4_instance(const Graph& g);

enum class TraceabilityVerdict { NotInClass, Traceable, Counterexample };
std::string_view to_string(TraceabilityVerdict v);

// Connected (K1_3, S)-free graphs are traceable for S in
// {C3, P4, Z1, B11, N111}; other S throw InvalidArgument.
TraceabilityVerdict check_traceability_pair_instance(const Graph& g, PatternName s);

}  // namespace gallai
