#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gallai {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Vertex subsets of graphs with at most 64 vertices. Exact routines in this
// library only run on such graphs.
using VertexMask = std::uint64_t;

inline constexpr int kMaskBits = 64;

constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
constexpr VertexMask full_mask(int n) { return n >= kMaskBits ? ~VertexMask{0} : bit(n) - 1; }
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr Vertex lowest(VertexMask m) { return std::countr_zero(m); }

std::vector<Vertex> mask_to_vector(VertexMask m);
VertexMask vector_to_mask(std::span<const Vertex> vs);

// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws LoopEdge / VertexOutOfRange; duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_masks(std::vector<VertexMask> rows);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  // Bitmask rows; only available when order() <= 64.
  bool has_masks() const noexcept { return n_ <= kMaskBits; }
  VertexMask mask(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  const std::vector<VertexMask>& masks() const { return rows_; }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  // d_X(v) and N_X(v) for a vertex subset X.
  VertexMask neighbors_in(Vertex v, VertexMask subset) const { return mask(v) & subset; }
  int degree_in(Vertex v, VertexMask subset) const { return popcount(neighbors_in(v, subset)); }

  // Induced subgraph G[vs]; vertex i of the result is vs[i].
  Graph induced(std::span<const Vertex> vs) const;
  Graph without_vertex(Vertex v) const;
  Graph relabeled(std::span<const Vertex> new_label) const;
  Graph complement() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexMask> rows_;
};

inline Graph from_edge_list(int n, std::span<const Edge> edges) { return Graph::from_edge_list(n, edges); }
inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return Graph::from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// Simple path as an ordered vertex sequence, stored in canonical orientation
// (first vertex id < last vertex id).
class VertexPath {
 public:
  VertexPath() = default;
  // Reverses the sequence if needed; validation is separate (see is_valid_path).
  explicit VertexPath(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  int length() const noexcept { return vertices_.empty() ? 0 : static_cast<int>(vertices_.size()) - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  VertexMask mask() const { return vector_to_mask(vertices_); }
  bool contains(Vertex v) const;

  auto operator<=>(const VertexPath&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

bool is_valid_path(const Graph& g, std::span<const Vertex> seq);
bool is_valid_cycle(const Graph& g, std::span<const Vertex> seq);

std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v);
std::vector<int> bfs_distances(const Graph& g, Vertex source);  // -1 = unreachable
// Shortest u-v path inside the vertex subset `within` (both endpoints must be in it).
std::optional<std::vector<Vertex>> shortest_path_within(const Graph& g, Vertex u, Vertex v, VertexMask within);

// Empty graph counts as connected.
bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
// Components of G[subset]; masks ordered by lowest vertex.
std::vector<VertexMask> components_within(const Graph& g, VertexMask subset);
bool is_clique(const Graph& g, VertexMask subset);

}  // namespace gallai
