#include "gallai/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gallai/error.hpp"

namespace gallai {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TruncatedBitVector: return "TruncatedBitVector";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::TrailingData: return "TrailingData";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PathCapExceeded: return "PathCapExceeded";
    case ErrorCode::TupleSpaceExceeded: return "TupleSpaceExceeded";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::PairwiseDisjoint: return "PairwiseDisjoint";
    case ErrorCode::EmptyIntersection: return "EmptyIntersection";
    case ErrorCode::InvalidCombParameters: return "InvalidCombParameters";
    case ErrorCode::CliqueEnumerationBudget: return "CliqueEnumerationBudget";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::UnknownPattern: return "UnknownPattern";
  }
  return "Unknown";
}

std::vector<Vertex> mask_to_vector(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

VertexMask vector_to_mask(std::span<const Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs) m |= bit(v);
  return m;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.m_ += nb.size();
  }
  g.m_ /= 2;
  if (n <= kMaskBits) {
    g.rows_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) g.rows_[static_cast<std::size_t>(v)] = vector_to_mask(g.adj_[static_cast<std::size_t>(v)]);
  }
  return g;
}

Graph Graph::from_masks(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaskBits) throw Error(ErrorCode::SizeLimitExceeded, "mask rows limited to 64 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (VertexMask r = rows[static_cast<std::size_t>(u)] & ~full_mask(u + 1); r; r &= r - 1) {
      const Vertex v = lowest(r);
      if (v >= n) throw Error(ErrorCode::VertexOutOfRange, "mask row references vertex beyond n");
      edges.emplace_back(u, v);
    }
  Graph g = from_edge_list(n, edges);
  for (Vertex u = 0; u < n; ++u)
    if ((rows[static_cast<std::size_t>(u)] & full_mask(n)) != g.rows_[static_cast<std::size_t>(u)])
      throw Error(ErrorCode::InvalidArgument, "mask rows are not symmetric");
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (has_masks()) return (mask(u) >> v) & 1U;
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (Vertex w : neighbors(vs[i])) {
      const int j = index[static_cast<std::size_t>(w)];
      if (j > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), j);
    }
  return from_edge_list(static_cast<int>(vs.size()), es);
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::relabeled(std::span<const Vertex> new_label) const {
  std::vector<Edge> es;
  es.reserve(m_);
  for (auto [u, v] : edges()) es.emplace_back(new_label[static_cast<std::size_t>(u)], new_label[static_cast<std::size_t>(v)]);
  return from_edge_list(n_, es);
}

Graph Graph::complement() const {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) es.emplace_back(u, v);
  return from_edge_list(n_, es);
}

VertexPath::VertexPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() >= 2 && vertices_.front() > vertices_.back())
    std::reverse(vertices_.begin(), vertices_.end());
}

bool VertexPath::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool is_valid_path(const Graph& g, std::span<const Vertex> seq) {
  if (seq.empty()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Vertex v = seq[i];
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) return false;
  }
  return true;
}

bool is_valid_cycle(const Graph& g, std::span<const Vertex> seq) {
  return seq.size() >= 3 && is_valid_path(g, seq) && g.adjacent(seq.front(), seq.back());
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::optional<int> bfs_distance(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw Error(ErrorCode::VertexOutOfRange, "bfs_distance endpoint out of range");
  const int d = bfs_distances(g, u)[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<std::vector<Vertex>> shortest_path_within(const Graph& g, Vertex u, Vertex v, VertexMask within) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  VertexMask seen = bit(u);
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (VertexMask next = g.mask(x) & within & ~seen; next; next &= next - 1) {
      const Vertex y = lowest(next);
      seen |= bit(y);
      parent[static_cast<std::size_t>(y)] = x;
      queue.push_back(y);
    }
  }
  if (!(seen & bit(v))) return std::nullopt;
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexMask> components_within(const Graph& g, VertexMask subset) {
  std::vector<VertexMask> out;
  VertexMask left = subset;
  while (left) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g.mask(lowest(f));
      next &= subset & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_clique(const Graph& g, VertexMask subset) {
  for (VertexMask s = subset; s; s &= s - 1) {
    const Vertex v = lowest(s);
    if ((g.mask(v) & subset) != (subset & ~bit(v))) return false;
  }
  return true;
}

}  // namespace gallai
