#pragma once

// Randomized oracle-equivalence suites shared by the unit tests and the
// acceptance runner. Each returns a tally instead of asserting so the caller
// decides how to report.

#include <random>
#include <sstream>
#include <string>

#include "gallai/blocks.hpp"
#include "gallai/comb.hpp"
#include "gallai/error.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/hamiltonicity.hpp"
#include "gallai/paths.hpp"
#include "gallai/patterns.hpp"
#include "oracles.hpp"

namespace suites {

struct Tally {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Every labeled graph on n vertices, n small.
template <class F>
void for_each_labeled_graph(int n, F&& f) {
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    std::vector<gallai::Edge> edges;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if (bits >> idx & 1) edges.push_back({u, v});
    f(gallai::Graph::from_edge_list(n, edges));
  }
}

inline std::string g6(const gallai::Graph& g) { return gallai::to_graph6(g); }

inline void check_embeddings(const gallai::Graph& g, Tally& t) {
  ++t.cases;
  for (gallai::PatternName name : gallai::catalog()) {
    const gallai::Graph& p = gallai::pattern(name).graph;
    const auto phi = gallai::contains_induced(g, p);
    const bool expected = oracle::contains_induced(g, p);
    if (phi.has_value() != expected) {
      t.fail(g6(g) + " " + std::string(gallai::to_string(name)) + ": disagrees with subset search");
      return;
    }
    if (phi && !oracle::maps_induced(g, p, *phi)) {
      t.fail(g6(g) + " " + std::string(gallai::to_string(name)) + ": embedding is not induced");
      return;
    }
  }
}

// contains_induced against subset search, every catalog pattern, n <= 8.
inline Tally induced_embedding(std::uint64_t seed, int random_cases) {
  Tally t;
  for (int n = 1; n <= 4; ++n) for_each_labeled_graph(n, [&](const gallai::Graph& g) { check_embeddings(g, t); });
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
    check_embeddings(oracle::random_graph(n, p, rng), t);
  }
  return t;
}

inline void check_longest_paths(const gallai::Graph& g, Tally& t) {
  ++t.cases;
  const auto expected = oracle::all_longest_paths(g);
  gallai::PathOptions table;
  gallai::PathOptions dfs;
  dfs.dp_limit = 0;
  for (const auto& options : {table, dfs}) {
    const auto report = gallai::enumerate_longest_paths(g, options);
    std::set<std::vector<gallai::Vertex>> got;
    for (const auto& p : report.paths) {
      if (!gallai::is_valid_path(g, p.vertices()) || p.length() != report.length) {
        t.fail(g6(g) + ": invalid or short path in report");
        return;
      }
      got.insert(p.vertices());
    }
    if (got != expected || report.path_count() != expected.size()) {
      t.fail(g6(g) + ": path set differs from naive enumeration (dp_limit " + std::to_string(options.dp_limit) + ")");
      return;
    }
    gallai::VertexMask common = gallai::full_mask(g.order());
    for (const auto& p : expected) common &= gallai::vector_to_mask(p);
    if (report.intersection != common || gallai::longest_path_intersection(g, options) != common) {
      t.fail(g6(g) + ": intersection differs from naive enumeration");
      return;
    }
    if (gallai::longest_path_length(g, options) != static_cast<int>(expected.begin()->size()) - 1) {
      t.fail(g6(g) + ": length differs from naive enumeration");
      return;
    }
  }
}

// Longest-path enumeration (subset table and DFS) against naive all-paths, connected n <= 7.
inline Tally longest_paths(std::uint64_t seed, int random_cases) {
  Tally t;
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const gallai::Graph& g) {
      if (oracle::connected(g)) check_longest_paths(g, t);
    });
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    check_longest_paths(oracle::random_connected_graph(n, p, rng), t);
  }
  return t;
}

inline void check_hamiltonicity(const gallai::Graph& g, Tally& t) {
  ++t.cases;
  const auto v = gallai::decide_hamiltonicity(g);
  if (v.hamiltonian != oracle::hamiltonian_cycle(g) || v.traceable != oracle::hamiltonian_path(g)) {
    t.fail(g6(g) + ": decision differs from permutation search");
    return;
  }
  if (v.hamiltonian != v.cycle.has_value() || v.traceable != v.path.has_value()) {
    t.fail(g6(g) + ": witness presence does not match decision");
    return;
  }
  if (v.cycle && (static_cast<int>(v.cycle->size()) != g.order() || !gallai::is_valid_cycle(g, *v.cycle))) {
    t.fail(g6(g) + ": invalid Hamiltonian cycle");
    return;
  }
  if (v.path && (static_cast<int>(v.path->vertex_count()) != g.order() || !gallai::is_valid_path(g, v.path->vertices())))
    t.fail(g6(g) + ": invalid Hamiltonian path");
}

// Hamiltonicity decisions against permutation search, n <= 8.
inline Tally hamiltonicity(std::uint64_t seed, int random_cases) {
  Tally t;
  for (int n = 1; n <= 5; ++n) for_each_labeled_graph(n, [&](const gallai::Graph& g) { check_hamiltonicity(g, t); });
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
    check_hamiltonicity(oracle::random_graph(n, p, rng), t);
  }
  return t;
}

inline void check_blocks(const gallai::Graph& g, Tally& t) {
  ++t.cases;
  const auto tree = gallai::block_cut_tree(g);
  std::vector<gallai::Vertex> expected;
  for (int v = 0; v < g.order(); ++v)
    if (oracle::is_cutvertex(g, v)) expected.push_back(v);
  if (tree.cutvertices() != expected) {
    t.fail(g6(g) + ": cutvertices differ from deletion test");
    return;
  }
  // Every edge lies in exactly one block.
  std::size_t edges_in_blocks = 0;
  for (const auto& [u, v] : g.edges()) {
    int owners = 0;
    for (const auto& b : tree.blocks())
      owners += std::count(b.begin(), b.end(), u) && std::count(b.begin(), b.end(), v);
    if (owners != 1) {
      t.fail(g6(g) + ": edge not in exactly one block");
      return;
    }
  }
  for (const auto& b : tree.blocks()) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) edges_in_blocks += g.adjacent(b[i], b[j]);
  }
  if (edges_in_blocks != g.size()) {
    t.fail(g6(g) + ": block edge counts do not sum to |E|");
    return;
  }
  const bool two_connected = g.order() >= 3 && tree.block_count() == 1 && tree.cutvertices().empty();
  if (gallai::is_two_connected(g) != two_connected) t.fail(g6(g) + ": 2-connectivity disagrees with blocks");
}

// Block-cutvertex tree against the vertex-deletion oracle, connected n <= 8.
inline Tally cutvertices(std::uint64_t seed, int random_cases) {
  Tally t;
  for (int n = 1; n <= 5; ++n)
    for_each_labeled_graph(n, [&](const gallai::Graph& g) {
      if (oracle::connected(g)) check_blocks(g, t);
    });
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_cases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    check_blocks(oracle::random_connected_graph(n, p, rng), t);
  }
  return t;
}

// Random connected node set of the given size grown from root.
inline gallai::TreeSubset random_subtree(const gallai::TreeAdjacency& tree, int root, int size, std::mt19937_64& rng) {
  std::vector<char> in(tree.size(), 0);
  std::vector<int> nodes{root}, frontier(tree[root].begin(), tree[root].end());
  in[root] = 1;
  while (static_cast<int>(nodes.size()) < size && !frontier.empty()) {
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
    const int x = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    if (in[x]) continue;
    in[x] = 1;
    nodes.push_back(x);
    for (int y : tree[x])
      if (!in[y]) frontier.push_back(y);
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

// Families of pairwise-intersecting random subtrees of random trees with at
// most 50 nodes: the Helly intersection must be nonempty and equal the
// node-by-node count.
inline Tally helly(std::uint64_t seed, int families) {
  Tally t;
  std::mt19937_64 rng(seed);
  while (t.cases < families) {
    const int n = std::uniform_int_distribution<int>(1, 50)(rng);
    const auto tree = oracle::random_tree(n, rng);
    const int wanted = std::uniform_int_distribution<int>(2, 8)(rng);
    std::vector<gallai::TreeSubset> family;
    for (int attempt = 0; attempt < 200 && static_cast<int>(family.size()) < wanted; ++attempt) {
      const int root = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int size = std::uniform_int_distribution<int>(1, std::max(1, n / 2))(rng);
      auto s = random_subtree(tree, root, size, rng);
      bool meets_all = true;
      for (const auto& f : family) {
        gallai::TreeSubset common;
        std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(common));
        if (common.empty()) meets_all = false;
      }
      if (meets_all) family.push_back(std::move(s));
    }
    if (family.size() < 2) continue;
    ++t.cases;
    gallai::TreeSubset expected;
    for (int x = 0; x < n; ++x) {
      bool everywhere = true;
      for (const auto& f : family) everywhere = everywhere && std::binary_search(f.begin(), f.end(), x);
      if (everywhere) expected.push_back(x);
    }
    std::ostringstream id;
    id << "tree of " << n << " nodes, " << family.size() << " subtrees";
    try {
      if (gallai::subtree_helly_intersection(tree, family) != expected || expected.empty())
        t.fail(id.str() + ": intersection differs from node count");
    } catch (const gallai::Error& e) {
      t.fail(id.str() + ": " + e.what());
    }
  }
  return t;
}

// Comb parameters with m in {3,4}, |C| <= 6, |L_i| <= 2 and at most max_n
// vertices; anchor sets are consecutive runs of the base.
inline std::vector<gallai::CombParameters> comb_grid(int max_n) {
  std::vector<gallai::CombParameters> grid;
  for (int m = 3; m <= 4; ++m)
    for (int base = m; base <= 6; ++base)
      for (int r = 0; r < (1 << (2 * m)); ++r)
        for (int l = 0; l < (1 << m); ++l) {
          std::vector<int> anchors, leaves;
          int anchored = 0, total = base;
          for (int i = 0; i < m; ++i) {
            anchors.push_back(1 + (r >> (2 * i) & 3));
            leaves.push_back(1 + (l >> i & 1));
            anchored += anchors.back();
            total += leaves.back();
          }
          if (anchored > base || total > max_n) continue;
          grid.push_back(gallai::comb_parameters_from_sizes(base, anchors, leaves));
        }
  return grid;
}

}  // namespace suites
