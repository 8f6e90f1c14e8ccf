#include "gallai/patterns.hpp"

#include <array>
#include <map>

#include "gallai/error.hpp"

namespace gallai {

namespace {

constexpr std::array kCatalog{PatternName::K1_3, PatternName::C3,  PatternName::P4,  PatternName::P5,
                              PatternName::P6,   PatternName::Z1,  PatternName::Z2,  PatternName::Z3,
                              PatternName::B11,  PatternName::B12, PatternName::N111, PatternName::TwoK2};

constexpr std::array kHamiltonianPairs{PatternName::C3, PatternName::P4, PatternName::P5,
                                       PatternName::P6, PatternName::Z1, PatternName::Z2,
                                       PatternName::Z3, PatternName::B11, PatternName::B12};

constexpr std::array kTraceablePairs{PatternName::C3, PatternName::P4, PatternName::Z1, PatternName::B11,
                                     PatternName::N111};

// (smaller, larger): the smaller pattern is an induced subgraph of the larger.
constexpr std::array<std::pair<PatternName, PatternName>, 7> kContainment{{
    {PatternName::P4, PatternName::P5},
    {PatternName::P5, PatternName::P6},
    {PatternName::C3, PatternName::Z1},
    {PatternName::Z1, PatternName::Z2},
    {PatternName::Z2, PatternName::Z3},
    {PatternName::Z1, PatternName::B11},
    {PatternName::B11, PatternName::B12},
}};

Pattern make_pattern(PatternName name) {
  switch (name) {
    case PatternName::K1_3: return {name, star_graph(3), true};
    case PatternName::C3: return {name, build_N(0, 0, 0), true};
    case PatternName::P4: return {name, path_graph(4), true};
    case PatternName::P5: return {name, path_graph(5), true};
    case PatternName::P6: return {name, path_graph(6), true};
    case PatternName::Z1: return {name, build_N(1, 0, 0), true};
    case PatternName::Z2: return {name, build_N(2, 0, 0), true};
    case PatternName::Z3: return {name, build_N(3, 0, 0), true};
    case PatternName::B11: return {name, build_N(1, 1, 0), true};
    case PatternName::B12: return {name, build_N(1, 2, 0), true};
    case PatternName::N111: return {name, build_N(1, 1, 1), true};
    case PatternName::TwoK2: return {name, from_edge_list(4, {{0, 1}, {2, 3}}), false};
  }
  throw Error(ErrorCode::UnknownPattern, "unhandled pattern");
}

// Pattern vertices in BFS order from 0, so each vertex (within a component)
// has an already-placed neighbour.
std::vector<Vertex> search_order(const Graph& p) {
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(p.order()), 0);
  for (Vertex s = 0; s < p.order(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    seen[static_cast<std::size_t>(s)] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      const Vertex u = order[head++];
      for (Vertex w : p.neighbors(u))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          order.push_back(w);
        }
    }
  }
  return order;
}

struct EmbeddingSearch {
  const Graph& g;
  const Graph& p;
  std::vector<Vertex> order;
  std::vector<Vertex> phi;
  VertexMask used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex pv = order[depth];
    VertexMask candidates = full_mask(g.order()) & ~used;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex pu = order[i];
      const Vertex gu = phi[static_cast<std::size_t>(pu)];
      candidates &= p.adjacent(pu, pv) ? g.mask(gu) : ~g.mask(gu);
    }
    const int need = p.degree(pv);
    for (; candidates; candidates &= candidates - 1) {
      const Vertex gv = lowest(candidates);
      if (g.degree(gv) < need) continue;
      phi[static_cast<std::size_t>(pv)] = gv;
      used |= bit(gv);
      if (extend(depth + 1)) return true;
      used &= ~bit(gv);
    }
    return false;
  }
};

}  // namespace

std::string_view to_string(PatternName name) {
  switch (name) {
    case PatternName::K1_3: return "K1_3";
    case PatternName::C3: return "C3";
    case PatternName::P4: return "P4";
    case PatternName::P5: return "P5";
    case PatternName::P6: return "P6";
    case PatternName::Z1: return "Z1";
    case PatternName::Z2: return "Z2";
    case PatternName::Z3: return "Z3";
    case PatternName::B11: return "B11";
    case PatternName::B12: return "B12";
    case PatternName::N111: return "N111";
    case PatternName::TwoK2: return "TwoK2";
  }
  return "?";
}

PatternName parse_pattern_name(std::string_view text) {
  for (PatternName name : kCatalog)
    if (to_string(name) == text) return name;
  throw Error(ErrorCode::UnknownPattern, std::string(text));
}

Graph build_N(int k, int l, int m) {
  if (k < 0 || l < 0 || m < 0) throw Error(ErrorCode::InvalidArgument, "build_N takes nonnegative path lengths");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  int next = 3;
  for (auto [root, len] : std::array<std::pair<int, int>, 3>{{{0, k}, {1, l}, {2, m}}}) {
    Vertex prev = root;
    for (int i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edge_list(next, edges);
}

Graph path_graph(int order) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(order, edges);
}

Graph cycle_graph(int order) {
  if (order < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i) edges.emplace_back(i, (i + 1) % order);
  return Graph::from_edge_list(order, edges);
}

Graph complete_graph(int order) {
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(order, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, edges);
}

const Pattern& pattern(PatternName name) {
  static const std::map<PatternName, Pattern> table = [] {
    std::map<PatternName, Pattern> t;
    for (PatternName n : kCatalog) t.emplace(n, make_pattern(n));
    return t;
  }();
  return table.at(name);
}

std::span<const PatternName> catalog() { return kCatalog; }
std::span<const PatternName> hamiltonian_pair_patterns() { return kHamiltonianPairs; }
std::span<const PatternName> traceable_pair_patterns() { return kTraceablePairs; }

std::optional<Embedding> contains_induced(const Graph& g, const Graph& p) {
  if (!g.has_masks()) throw Error(ErrorCode::SizeLimitExceeded, "induced search limited to 64-vertex hosts");
  if (p.order() > g.order()) return std::nullopt;
  EmbeddingSearch search{g, p, search_order(p), std::vector<Vertex>(static_cast<std::size_t>(p.order()), -1)};
  if (!search.extend(0)) return std::nullopt;
  return search.phi;
}

bool is_induced_embedding(const Graph& g, const Graph& p, std::span<const Vertex> phi) {
  if (phi.size() != static_cast<std::size_t>(p.order())) return false;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] < 0 || phi[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < phi.size(); ++j) {
      if (phi[i] == phi[j]) return false;
      if (p.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) != g.adjacent(phi[i], phi[j])) return false;
    }
  }
  return true;
}

bool is_free_of(const Graph& g, PatternName name) { return !contains_induced(g, pattern(name)).has_value(); }

bool is_pair_free(const Graph& g, PatternName r, PatternName s) { return is_free_of(g, r) && is_free_of(g, s); }

std::vector<PatternName> classify_hamiltonian_pairs(const Graph& g) {
  std::map<PatternName, bool> free;
  for (PatternName s : kHamiltonianPairs) free[s] = is_free_of(g, s);
  for (auto [smaller, larger] : kContainment)
    if (free[smaller] && !free[larger])
      throw Error(ErrorCode::InvalidArgument, std::string("containment order violated: ") + std::string(to_string(smaller)) +
                                                  "-free but not " + std::string(to_string(larger)) + "-free");
  std::vector<PatternName> out;
  if (!is_free_of(g, PatternName::K1_3)) return out;
  for (PatternName s : kHamiltonianPairs)
    if (free[s]) out.push_back(s);
  return out;
}

}  // namespace gallai
