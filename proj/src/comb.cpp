#include "gallai/comb.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>

#include "gallai/error.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::InvalidCombParameters, msg); }

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    const std::string_view tok = text.substr(start, end - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) bad("not an integer: \"" + std::string(tok) + "\"");
    out.push_back(value);
    start = end + 1;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

struct CliqueSearch {
  const Graph& g;
  std::uint64_t budget;
  std::uint64_t calls = 0;
  std::vector<VertexMask> out;

  // Bron-Kerbosch with pivoting.
  void expand(VertexMask r, VertexMask p, VertexMask x) {
    if (++calls > budget) throw Error(ErrorCode::CliqueEnumerationBudget, "maximal clique budget exhausted");
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    const VertexMask px = p | x;
    Vertex pivot = lowest(px);
    int best = -1;
    for (VertexMask s = px; s; s &= s - 1) {
      const Vertex u = lowest(s);
      const int c = popcount(p & g.mask(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (VertexMask cand = p & ~g.mask(pivot); cand; cand &= cand - 1) {
      const Vertex v = lowest(cand);
      expand(r | bit(v), p & g.mask(v), x & g.mask(v));
      p &= ~bit(v);
      x |= bit(v);
    }
  }
};

std::optional<CombDecomposition> decompose_with_base(const Graph& g, VertexMask base) {
  const VertexMask rest = full_mask(g.order()) & ~base;
  const std::vector<VertexMask> comps = components_within(g, rest);
  const int m = static_cast<int>(comps.size());
  if (m < 3 || popcount(base) < m) return std::nullopt;
  CombDecomposition d;
  d.base = mask_to_vector(base);
  VertexMask used_anchors = 0;
  for (VertexMask leaf : comps) {
    if (!is_clique(g, leaf)) return std::nullopt;
    const VertexMask anchor = g.mask(lowest(leaf)) & base;
    if (!anchor || (anchor & used_anchors)) return std::nullopt;
    for (VertexMask s = leaf; s; s &= s - 1)
      if ((g.mask(lowest(s)) & base) != anchor) return std::nullopt;
    used_anchors |= anchor;
    d.leaves.push_back(mask_to_vector(leaf));
    d.anchors.push_back(mask_to_vector(anchor));
  }
  return d;
}

}  // namespace

std::vector<Vertex> CombDecomposition::cutvertices() const {
  std::vector<Vertex> out;
  for (const auto& r : anchors)
    if (r.size() == 1) out.push_back(r.front());
  std::sort(out.begin(), out.end());
  return out;
}

BuiltComb build_comb(int base_size, const std::vector<std::vector<int>>& anchor_sets, const std::vector<int>& leaf_sizes) {
  const int m = static_cast<int>(anchor_sets.size());
  if (static_cast<int>(leaf_sizes.size()) != m) bad("anchor and leaf lists differ in length");
  if (m < 3) bad("a generalized comb needs m >= 3");
  if (base_size < m) bad("base must have at least m vertices");
  std::vector<char> anchored(static_cast<std::size_t>(base_size), 0);
  for (const auto& r : anchor_sets) {
    if (r.empty()) bad("anchor sets must be nonempty");
    for (int c : r) {
      if (c < 0 || c >= base_size) bad("anchor index out of range");
      if (anchored[static_cast<std::size_t>(c)]) bad("anchor sets must be disjoint");
      anchored[static_cast<std::size_t>(c)] = 1;
    }
  }
  for (int l : leaf_sizes)
    if (l < 1) bad("leaf cliques must be nonempty");

  BuiltComb out;
  std::vector<Edge> edges;
  for (int i = 0; i < base_size; ++i) {
    out.decomposition.base.push_back(i);
    for (int j = i + 1; j < base_size; ++j) edges.emplace_back(i, j);
  }
  int next = base_size;
  for (int i = 0; i < m; ++i) {
    std::vector<Vertex> leaf;
    for (int k = 0; k < leaf_sizes[static_cast<std::size_t>(i)]; ++k) leaf.push_back(next++);
    for (std::size_t a = 0; a < leaf.size(); ++a) {
      for (std::size_t b = a + 1; b < leaf.size(); ++b) edges.emplace_back(leaf[a], leaf[b]);
      for (int c : anchor_sets[static_cast<std::size_t>(i)]) edges.emplace_back(leaf[a], c);
    }
    std::vector<Vertex> anchor(anchor_sets[static_cast<std::size_t>(i)].begin(), anchor_sets[static_cast<std::size_t>(i)].end());
    std::sort(anchor.begin(), anchor.end());
    out.decomposition.leaves.push_back(std::move(leaf));
    out.decomposition.anchors.push_back(std::move(anchor));
  }
  out.graph = Graph::from_edge_list(next, edges);
  return out;
}

CombParameters comb_parameters_from_sizes(int base_size, const std::vector<int>& anchor_sizes,
                                          const std::vector<int>& leaf_sizes) {
  CombParameters p;
  p.base_size = base_size;
  p.leaf_sizes = leaf_sizes;
  int next = 0;
  for (int r : anchor_sizes) {
    if (r < 1) bad("anchor sizes must be positive");
    std::vector<int> set;
    for (int k = 0; k < r; ++k) set.push_back(next++);
    p.anchor_sets.push_back(std::move(set));
  }
  if (next > base_size) bad("anchor sizes exceed the base");
  return p;
}

CombParameters parse_comb_parameters(std::string_view text) {
  const auto fields = split(text, ';');
  if (fields.size() != 4) bad("expected \"m;|C|;R-sizes;L-sizes\"");
  const auto head = parse_int_list(fields[0], ',');
  const auto base = parse_int_list(fields[1], ',');
  if (head.size() != 1 || base.size() != 1) bad("m and |C| must be single integers");
  const auto r = parse_int_list(fields[2], ',');
  const auto l = parse_int_list(fields[3], ',');
  if (static_cast<int>(r.size()) != head[0] || static_cast<int>(l.size()) != head[0])
    bad("R-sizes and L-sizes must each list m values");
  return comb_parameters_from_sizes(base[0], r, l);
}

CombParameters parse_comb_anchor_file(std::string_view text, int base_size) {
  CombParameters p;
  p.base_size = base_size;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) bad("anchor line needs \"<leaf size>: <indices>\"");
    const auto size = parse_int_list(line.substr(0, colon), ',');
    if (size.size() != 1) bad("bad leaf size");
    std::istringstream rest(line.substr(colon + 1));
    std::vector<int> anchors;
    int c = 0;
    while (rest >> c) anchors.push_back(c);
    if (!rest.eof()) bad("bad anchor index list");
    p.leaf_sizes.push_back(size.front());
    p.anchor_sets.push_back(std::move(anchors));
  }
  return p;
}

bool is_valid_comb(const Graph& g, const CombDecomposition& d) {
  if (!g.has_masks()) return false;
  const int m = d.m();
  if (m < 3 || static_cast<int>(d.anchors.size()) != m || static_cast<int>(d.base.size()) < m) return false;
  const int n = g.order();
  auto in_range = [n](const std::vector<Vertex>& vs) {
    return std::all_of(vs.begin(), vs.end(), [n](Vertex v) { return v >= 0 && v < n; });
  };
  if (!in_range(d.base)) return false;
  const VertexMask base = vector_to_mask(d.base);
  if (popcount(base) != static_cast<int>(d.base.size())) return false;
  VertexMask covered = base;
  VertexMask anchors_seen = 0;
  std::vector<VertexMask> expected(static_cast<std::size_t>(n), 0);
  for (Vertex c : d.base) expected[static_cast<std::size_t>(c)] |= base & ~bit(c);
  for (int i = 0; i < m; ++i) {
    const auto& leaf_v = d.leaves[static_cast<std::size_t>(i)];
    const auto& anchor_v = d.anchors[static_cast<std::size_t>(i)];
    if (leaf_v.empty() || anchor_v.empty() || !in_range(leaf_v) || !in_range(anchor_v)) return false;
    const VertexMask leaf = vector_to_mask(leaf_v);
    const VertexMask anchor = vector_to_mask(anchor_v);
    if (popcount(leaf) != static_cast<int>(leaf_v.size()) || popcount(anchor) != static_cast<int>(anchor_v.size())) return false;
    if ((leaf & covered) || (anchor & ~base) || (anchor & anchors_seen)) return false;
    covered |= leaf;
    anchors_seen |= anchor;
    for (Vertex v : leaf_v) expected[static_cast<std::size_t>(v)] |= (leaf & ~bit(v)) | anchor;
    for (Vertex c : anchor_v) expected[static_cast<std::size_t>(c)] |= leaf;
  }
  if (covered != full_mask(n)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.mask(v) != expected[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::vector<VertexMask> maximal_cliques(const Graph& g, std::uint64_t budget) {
  if (!g.has_masks()) throw Error(ErrorCode::SizeLimitExceeded, "clique enumeration limited to 64 vertices");
  CliqueSearch search{g, budget, 0, {}};
  if (g.order() > 0) search.expand(0, full_mask(g.order()), 0);
  std::sort(search.out.begin(), search.out.end(), [](VertexMask a, VertexMask b) {
    return mask_to_vector(a) < mask_to_vector(b);
  });
  return search.out;
}

std::optional<CombDecomposition> recognize_generalized_comb(const Graph& g, std::uint64_t clique_budget) {
  if (g.order() == 0 || !is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "comb recognition needs a connected graph");
  // Cliques come sorted, so the first hit has the smallest base.
  for (VertexMask c : maximal_cliques(g, clique_budget))
    if (auto d = decompose_with_base(g, c)) return d;
  return std::nullopt;
}

std::optional<CombDecomposition> recognize_comb_in_class(const Graph& g, std::uint64_t clique_budget) {
  if (!is_pair_free(g, PatternName::K1_3, PatternName::B12))
    throw Error(ErrorCode::NotInClass, "graph is not (K1_3, B12)-free");
  return recognize_generalized_comb(g, clique_budget);
}

bool comb_base_invariant_check(const Graph& g, const CombDecomposition& d, const PathOptions& options) {
  if (!is_valid_comb(g, d)) throw Error(ErrorCode::InvalidArgument, "decomposition does not describe the graph");
  const VertexMask base = vector_to_mask(d.base);
  return (longest_path_intersection(g, options) & base) == base;
}

}  // namespace gallai
