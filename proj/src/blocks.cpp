#include "gallai/blocks.hpp"

#include <algorithm>
#include <iterator>

#include "gallai/error.hpp"

namespace gallai {

namespace {

struct Frame {
  Vertex v;
  Vertex parent;
  std::size_t next;  // index into neighbors(v)
};

}  // namespace

BlockCutTree BlockCutTree::build(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "block-cutvertex tree needs a connected graph");
  BlockCutTree t;
  t.cut_node_.assign(static_cast<std::size_t>(n), -1);
  t.membership_.assign(static_cast<std::size_t>(n), {});
  if (n == 0) return t;

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> raw_blocks;
  int timer = 0;
  int root_children = 0;

  std::vector<Frame> stack{{0, -1, 0}};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nb = g.neighbors(f.v);
    if (f.next < nb.size()) {
      const Vertex w = nb[f.next++];
      if (disc[static_cast<std::size_t>(w)] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
        edge_stack.emplace_back(f.v, w);
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
      }
      continue;
    }
    const Vertex v = f.v;
    const Vertex parent = f.parent;
    stack.pop_back();
    if (parent < 0) continue;
    low[static_cast<std::size_t>(parent)] = std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
    if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(parent)]) {
      if (parent != 0) is_cut[static_cast<std::size_t>(parent)] = 1;
      std::vector<Vertex> block;
      while (true) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.first);
        block.push_back(e.second);
        if (e == Edge{parent, v}) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      raw_blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) is_cut[0] = 1;
  if (raw_blocks.empty()) raw_blocks.push_back({0});  // K1

  std::sort(raw_blocks.begin(), raw_blocks.end());
  t.blocks_ = std::move(raw_blocks);
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)]) t.cutvertices_.push_back(v);

  const int nb = t.block_count();
  t.tree_.assign(static_cast<std::size_t>(nb) + t.cutvertices_.size(), {});
  for (std::size_t i = 0; i < t.cutvertices_.size(); ++i)
    t.cut_node_[static_cast<std::size_t>(t.cutvertices_[i])] = nb + static_cast<int>(i);
  for (int b = 0; b < nb; ++b)
    for (Vertex v : t.blocks_[static_cast<std::size_t>(b)]) {
      t.membership_[static_cast<std::size_t>(v)].push_back(b);
      const int c = t.cut_node_[static_cast<std::size_t>(v)];
      if (c >= 0) {
        t.tree_[static_cast<std::size_t>(b)].push_back(c);
        t.tree_[static_cast<std::size_t>(c)].push_back(b);
      }
    }
  for (auto& adj : t.tree_) std::sort(adj.begin(), adj.end());
  return t;
}

bool BlockCutTree::is_cutvertex(Vertex v) const { return cut_node_[static_cast<std::size_t>(v)] >= 0; }
int BlockCutTree::cutvertex_node(Vertex v) const { return cut_node_[static_cast<std::size_t>(v)]; }
Vertex BlockCutTree::cutvertex_at(int node) const {
  return cutvertices_[static_cast<std::size_t>(node - block_count())];
}

TreeSubset project_path(const BlockCutTree& t, const VertexPath& p) {
  TreeSubset nodes;
  for (Vertex v : p.vertices()) {
    const auto& bs = t.blocks_containing(v);
    nodes.insert(nodes.end(), bs.begin(), bs.end());
    if (t.is_cutvertex(v)) nodes.push_back(t.cutvertex_node(v));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

bool induces_subtree(const TreeAdjacency& tree, const TreeSubset& nodes) {
  if (nodes.empty()) return false;
  const int node_count = static_cast<int>(tree.size());
  std::vector<char> in(tree.size(), 0);
  for (int x : nodes) {
    if (x < 0 || x >= node_count) return false;
    in[static_cast<std::size_t>(x)] = 1;
  }
  std::vector<int> stack{nodes.front()};
  std::vector<char> seen(in.size(), 0);
  seen[static_cast<std::size_t>(nodes.front())] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : tree[static_cast<std::size_t>(x)])
      if (in[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        stack.push_back(y);
      }
  }
  return reached == nodes.size();
}

bool induces_subtree(const BlockCutTree& t, const TreeSubset& nodes) { return induces_subtree(t.tree_adjacency(), nodes); }

TreeSubset subtree_helly_intersection(const TreeAdjacency& tree, const std::vector<TreeSubset>& subtrees) {
  if (subtrees.empty()) throw Error(ErrorCode::InvalidArgument, "empty subtree family");
  for (const auto& s : subtrees)
    if (!induces_subtree(tree, s)) throw Error(ErrorCode::InvalidArgument, "node set does not induce a subtree");
  for (std::size_t i = 0; i < subtrees.size(); ++i)
    for (std::size_t j = i + 1; j < subtrees.size(); ++j) {
      TreeSubset common;
      std::set_intersection(subtrees[i].begin(), subtrees[i].end(), subtrees[j].begin(), subtrees[j].end(),
                            std::back_inserter(common));
      if (common.empty())
        throw Error(ErrorCode::PairwiseDisjoint, "subtrees " + std::to_string(i) + " and " + std::to_string(j) + " are disjoint");
    }
  TreeSubset acc = subtrees.front();
  for (std::size_t i = 1; i < subtrees.size(); ++i) {
    TreeSubset next;
    std::set_intersection(acc.begin(), acc.end(), subtrees[i].begin(), subtrees[i].end(), std::back_inserter(next));
    acc = std::move(next);
  }
  if (acc.empty()) throw Error(ErrorCode::EmptyIntersection, "pairwise-intersecting subtrees with no common node");
  return acc;
}

TreeSubset subtree_helly_intersection(const BlockCutTree& t, const std::vector<TreeSubset>& subtrees) {
  return subtree_helly_intersection(t.tree_adjacency(), subtrees);
}

int find_central_block(const BlockCutTree& t, const LongestPathReport& report) {
  if (report.paths.empty()) throw Error(ErrorCode::InvalidArgument, "no longest paths in report");
  std::vector<TreeSubset> projected;
  projected.reserve(report.paths.size());
  for (const auto& p : report.paths) projected.push_back(project_path(t, p));
  const TreeSubset common = subtree_helly_intersection(t, projected);
  for (int node : common)
    if (!t.is_block_node(node)) return node;
  return common.front();
}

int find_central_block(const Graph& g, const LongestPathReport& report) {
  return find_central_block(BlockCutTree::build(g), report);
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  const BlockCutTree t = BlockCutTree::build(g);
  return t.cutvertices().empty() && t.block_count() == 1;
}

}  // namespace gallai
