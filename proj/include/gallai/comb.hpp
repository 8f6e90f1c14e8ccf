#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/paths.hpp"

namespace gallai {

// Generalized comb: base clique C, leaf cliques L_1..L_m, anchor sets
// R_i subset of C; every vertex of L_i is joined to exactly R_i and there are no other
// edges. m >= 3, |C| >= m, the R_i are nonempty and pairwise disjoint.
struct CombDecomposition {
  std::vector<Vertex> base;
  std::vector<std::vector<Vertex>> leaves;
  std::vector<std::vector<Vertex>> anchors;

  int m() const noexcept { return static_cast<int>(leaves.size()); }
  // Base vertices anchoring a single-vertex R_i; these are the cutvertices.
  std::vector<Vertex> cutvertices() const;
  bool operator==(const CombDecomposition&) const = default;
};

struct CombParameters {
  int base_size = 0;
  std::vector<std::vector<int>> anchor_sets;  // indices into the base
  std::vector<int> leaf_sizes;
};

struct BuiltComb {
  Graph graph;
  CombDecomposition decomposition;
};

// Base vertices are 0..base_size-1, then leaves in order. Throws
// InvalidCombParameters.
BuiltComb build_comb(int base_size, const std::vector<std::vector<int>>& anchor_sets, const std::vector<int>& leaf_sizes);
inline BuiltComb build_comb(const CombParameters& p) { return build_comb(p.base_size, p.anchor_sets, p.leaf_sizes); }

// Anchor sets taken as consecutive runs of the base: R_1 = {0..r_1-1}, ...
CombParameters comb_parameters_from_sizes(int base_size, const std::vector<int>& anchor_sizes,
                                          const std::vector<int>& leaf_sizes);
// "m;|C|;r_1,...,r_m;l_1,...,l_m"
CombParameters parse_comb_parameters(std::string_view text);
// Irregular anchors: one line per leaf, "<leaf size>: <base index> <base index> ...".
CombParameters parse_comb_anchor_file(std::string_view text, int base_size);

// Edge-by-edge comparison against the definitional edge set.
bool is_valid_comb(const Graph& g, const CombDecomposition& d);

inline constexpr std::uint64_t kDefaultCliqueBudget = 1'000'000;

// Candidate bases are the maximal cliques; the decomposition with the
// lexicographically smallest base wins. Throws CliqueEnumerationBudget.
std::optional<CombDecomposition> recognize_generalized_comb(const Graph& g,
                                                            std::uint64_t clique_budget = kDefaultCliqueBudget);
// Same, restricted to connected (K1_3, B12)-free graphs; throws NotInClass.
std::optional<CombDecomposition> recognize_comb_in_class(const Graph& g,
                                                         std::uint64_t clique_budget = kDefaultCliqueBudget);

// Maximal cliques in lexicographic order of their sorted vertex lists.
std::vector<VertexMask> maximal_cliques(const Graph& g, std::uint64_t budget = kDefaultCliqueBudget);

// True iff the base lies on every longest path. Throws InvalidArgument if d
// does not describe g.
bool comb_base_invariant_check(const Graph& g, const CombDecomposition& d, const PathOptions& options = {});

}  // namespace gallai
