#pragma once

// Brute-force reference implementations. They only read adjacency through
// Graph::adjacent and never call into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gallai/graph.hpp"

namespace oracle {

using gallai::Graph;
using gallai::Vertex;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<gallai::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return gallai::Graph::from_edge_list(n, edges);
}

inline bool connected(const Graph& g, std::vector<bool> removed = {}) {
  const int n = g.order();
  if (removed.empty()) removed.assign(static_cast<std::size_t>(n), false);
  int start = -1, alive = 0;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  if (alive == 0) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!removed[v] && !seen[v] && g.adjacent(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == alive;
}

// Connected random graph: retries, then falls back to adding a spanning path.
inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 50; ++attempt) {
    Graph g = random_graph(n, p, rng);
    if (connected(g)) return g;
  }
  Graph g = random_graph(n, p, rng);
  std::vector<gallai::Edge> edges = g.edges();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i + 1 < n; ++i) edges.push_back({order[i], order[i + 1]});
  return gallai::Graph::from_edge_list(n, edges);
}

inline bool is_cutvertex(const Graph& g, Vertex v) {
  std::vector<bool> removed(static_cast<std::size_t>(g.order()), false);
  removed[v] = true;
  return !connected(g, removed);
}

// Every simple path with the maximum number of edges, each once, stored
// with first vertex < last vertex. A single vertex counts as a path.
inline std::set<std::vector<Vertex>> all_longest_paths(const Graph& g) {
  const int n = g.order();
  std::set<std::vector<Vertex>> best;
  std::size_t best_size = 0;
  std::vector<Vertex> path;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto record = [&] {
    if (path.size() < best_size) return;
    if (path.size() > best_size) {
      best.clear();
      best_size = path.size();
    }
    std::vector<Vertex> p = path;
    if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    best.insert(p);
  };
  auto extend = [&](auto&& self, Vertex u) -> void {
    record();
    for (int v = 0; v < n; ++v)
      if (!used[v] && g.adjacent(u, v)) {
        used[v] = true;
        path.push_back(v);
        self(self, v);
        path.pop_back();
        used[v] = false;
      }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    path = {s};
    extend(extend, s);
    used[s] = false;
  }
  return best;
}

inline bool hamiltonian_cycle(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  std::vector<int> perm(static_cast<std::size_t>(n - 1));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (int i = 0; ok && i + 1 < n - 1; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i + 1 < n; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Is vertex i of h mapped to phi[i] an isomorphism between h and g[phi]?
inline bool maps_induced(const Graph& g, const Graph& h, const std::vector<int>& phi) {
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.adjacent(i, j) != g.adjacent(phi[i], phi[j])) return false;
  return true;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (maps_induced(g, h, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Tries every |V(p)|-subset of V(g) and every ordering of it.
inline bool contains_induced(const Graph& g, const Graph& p) {
  const int n = g.order(), k = p.order();
  if (k > n) return false;
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + k, true);
  do {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (choose[v]) subset.push_back(v);
    do {
      if (maps_induced(g, p, subset)) return true;
    } while (std::next_permutation(subset.begin(), subset.end()));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return false;
}

// Smallest upper-triangle bit string over all relabelings.
inline std::uint64_t min_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of connected graphs on n vertices, via every labeled graph.
inline std::size_t connected_class_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
    std::vector<gallai::Edge> edges;
    int idx = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++idx)
        if (bits >> idx & 1) edges.push_back({u, v});
    Graph g = gallai::Graph::from_edge_list(n, edges);
    if (connected(g)) classes.insert(min_code(g));
  }
  return classes.size();
}

// Random tree on n nodes as adjacency lists (random parent for each node).
inline std::vector<std::vector<int>> random_tree(int n, std::mt19937_64& rng) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    adj[v].push_back(parent);
    adj[parent].push_back(v);
  }
  return adj;
}

}  // namespace oracle
