#pragma once

#include <vector>

#include "gallai/graph.hpp"
#include "gallai/paths.hpp"

namespace gallai {

// Node ids: blocks first (0..block_count()-1, in lexicographic order of their
// sorted vertex lists), then cutvertices in increasing vertex order.
class BlockCutTree {
 public:
  // Lowpoint DFS; throws DisconnectedInput.
  static BlockCutTree build(const Graph& g);

  const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
  const std::vector<Vertex>& cutvertices() const noexcept { return cutvertices_; }
  const std::vector<std::vector<int>>& tree_adjacency() const noexcept { return tree_; }

  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  int node_count() const noexcept { return static_cast<int>(tree_.size()); }
  bool is_block_node(int node) const noexcept { return node < block_count(); }
  bool is_cutvertex(Vertex v) const;
  int cutvertex_node(Vertex v) const;    // -1 if v is not a cutvertex
  Vertex cutvertex_at(int node) const;  // requires !is_block_node(node)

  const std::vector<Vertex>& block(int node) const { return blocks_[static_cast<std::size_t>(node)]; }
  VertexMask block_mask(int node) const { return vector_to_mask(block(node)); }
  // Block nodes whose block contains v.
  const std::vector<int>& blocks_containing(Vertex v) const { return membership_[static_cast<std::size_t>(v)]; }

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<Vertex> cutvertices_;
  std::vector<int> cut_node_;  // per vertex, -1 if not a cutvertex
  std::vector<std::vector<int>> membership_;
  std::vector<std::vector<int>> tree_;
};

inline BlockCutTree block_cut_tree(const Graph& g) { return BlockCutTree::build(g); }

// Sorted node ids.
using TreeSubset = std::vector<int>;
using TreeAdjacency = std::vector<std::vector<int>>;

TreeSubset project_path(const BlockCutTree& t, const VertexPath& p);
bool induces_subtree(const BlockCutTree& t, const TreeSubset& nodes);
bool induces_subtree(const TreeAdjacency& tree, const TreeSubset& nodes);

// Common nodes of pairwise-intersecting subtrees. Throws InvalidArgument for
// a non-subtree input, PairwiseDisjoint if two members miss each other, and
// EmptyIntersection if the common part is empty.
TreeSubset subtree_helly_intersection(const BlockCutTree& t, const std::vector<TreeSubset>& subtrees);
// Same on any tree given by adjacency lists.
TreeSubset subtree_helly_intersection(const TreeAdjacency& tree, const std::vector<TreeSubset>& subtrees);

// Node common to every projected longest path: the smallest cutvertex node
// if any, else the first block node.
int find_central_block(const Graph& g, const LongestPathReport& report);
int find_central_block(const BlockCutTree& t, const LongestPathReport& report);

// Connected, at least 3 vertices, no cutvertex.
bool is_two_connected(const Graph& g);

}  // namespace gallai
