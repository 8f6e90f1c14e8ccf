#include <doctest.h>

#include <set>

#include "gallai/blocks.hpp"
#include "gallai/comb.hpp"
#include "gallai/error.hpp"
#include "gallai/patterns.hpp"
#include "oracles.hpp"
#include "suites.hpp"

using namespace gallai;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no exception");
  return ErrorCode::InvalidArgument;
}

int total_order(const CombParameters& p) {
  int n = p.base_size;
  for (int l : p.leaf_sizes) n += l;
  return n;
}

// Edge set written straight from the definition: base clique, leaf cliques,
// each leaf vertex joined to its anchors.
std::set<Edge> definitional_edges(const CombParameters& p) {
  std::set<Edge> edges;
  for (int u = 0; u < p.base_size; ++u)
    for (int v = u + 1; v < p.base_size; ++v) edges.insert({u, v});
  int next = p.base_size;
  for (std::size_t i = 0; i < p.leaf_sizes.size(); ++i) {
    const int first = next;
    next += p.leaf_sizes[i];
    for (int u = first; u < next; ++u) {
      for (int v = u + 1; v < next; ++v) edges.insert({u, v});
      for (int c : p.anchor_sets[i]) edges.insert({c, u});
    }
  }
  return edges;
}

}  // namespace

TEST_SUITE("comb") {
  TEST_CASE("parameter text") {
    const auto p = parse_comb_parameters("3;5;1,2,1;2,1,1");
    CHECK(p.base_size == 5);
    CHECK(p.anchor_sets == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
    CHECK(p.leaf_sizes == std::vector<int>{2, 1, 1});
    const auto q = parse_comb_anchor_file("# leaves\n2: 0 4\n1: 1\n1: 2 3\n", 5);
    CHECK(q.anchor_sets == std::vector<std::vector<int>>{{0, 4}, {1}, {2, 3}});
    CHECK(q.leaf_sizes == std::vector<int>{2, 1, 1});
    CHECK(code_of([] { parse_comb_parameters("3;5;1,1;1,1,1"); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { parse_comb_parameters("3;x;1,1,1;1,1,1"); }) == ErrorCode::InvalidCombParameters);
  }

  TEST_CASE("invalid parameters") {
    CHECK(code_of([] { build_comb(4, {{0}, {1}}, {1, 1}); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { build_comb(2, {{0}, {1}, {1}}, {1, 1, 1}); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { build_comb(4, {{0}, {1}, {1}}, {1, 1, 1}); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { build_comb(4, {{0}, {1}, {5}}, {1, 1, 1}); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { build_comb(4, {{0}, {1}, {}}, {1, 1, 1}); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { build_comb(4, {{0}, {1}, {2}}, {1, 0, 1}); }) == ErrorCode::InvalidCombParameters);
    CHECK(code_of([] { comb_parameters_from_sizes(4, {2, 2, 1}, {1, 1, 1}); }) == ErrorCode::InvalidCombParameters);
  }

  TEST_CASE("build matches the definition and recognition round-trips") {
    const auto grid = suites::comb_grid(12);
    CHECK(grid.size() > 100);
    for (const auto& p : grid) {
      const auto built = build_comb(p);
      const auto edges = built.graph.edges();
      REQUIRE(std::set<Edge>(edges.begin(), edges.end()) == definitional_edges(p));
      REQUIRE(built.graph.order() == total_order(p));
      REQUIRE(is_valid_comb(built.graph, built.decomposition));
      const auto found = recognize_generalized_comb(built.graph);
      REQUIRE(found.has_value());
      REQUIRE(is_valid_comb(built.graph, *found));
      CHECK(found->m() == built.decomposition.m());
    }
  }

  TEST_CASE("cutvertices of a comb are its single anchors") {
    const auto built = build_comb(5, {{0}, {1, 2}, {3}}, {1, 2, 1});
    CHECK(built.decomposition.cutvertices() == std::vector<Vertex>{0, 3});
    CHECK(block_cut_tree(built.graph).cutvertices() == std::vector<Vertex>{0, 3});
  }

  TEST_CASE("validity rejects a wrong decomposition") {
    auto built = build_comb(4, {{0}, {1}, {2}}, {1, 1, 1});
    CombDecomposition d = built.decomposition;
    std::swap(d.anchors[0], d.anchors[1]);
    CHECK_FALSE(is_valid_comb(built.graph, d));
    d = built.decomposition;
    d.base.pop_back();
    CHECK_FALSE(is_valid_comb(built.graph, d));
  }

  TEST_CASE("non-combs") {
    CHECK_FALSE(recognize_generalized_comb(path_graph(6)));
    CHECK_FALSE(recognize_generalized_comb(cycle_graph(5)));
    CHECK_FALSE(recognize_generalized_comb(complete_graph(5)));
    CHECK(code_of([] { recognize_comb_in_class(star_graph(3)); }) == ErrorCode::NotInClass);
    CHECK(code_of([] { recognize_generalized_comb(Graph::from_edge_list(2, std::vector<Edge>{})); }) ==
          ErrorCode::DisconnectedInput);
  }

  TEST_CASE("maximal cliques") {
    const auto cliques = maximal_cliques(path_graph(4));
    CHECK(cliques == std::vector<VertexMask>{0b0011, 0b0110, 0b1100});
    CHECK(maximal_cliques(complete_graph(6)).size() == 1);
  }

  TEST_CASE("base lies on every longest path, naive enumeration") {
    for (const auto& p : suites::comb_grid(10)) {
      const auto built = build_comb(p);
      bool covered = true;
      for (const auto& path : oracle::all_longest_paths(built.graph))
        for (Vertex c : built.decomposition.base) covered = covered && std::count(path.begin(), path.end(), c);
      REQUIRE(covered);
      REQUIRE(comb_base_invariant_check(built.graph, built.decomposition));
    }
  }

  TEST_CASE("invariant check rejects a foreign decomposition") {
    const auto a = build_comb(4, {{0}, {1}, {2}}, {1, 1, 1});
    const auto b = build_comb(4, {{0}, {1}, {2}}, {2, 1, 1});
    CHECK(code_of([&] { comb_base_invariant_check(a.graph, b.decomposition); }) == ErrorCode::InvalidArgument);
  }
}
