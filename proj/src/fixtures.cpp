#include "gallai/fixtures.hpp"

#include <array>

#include "gallai/error.hpp"
#include "gallai/patterns.hpp"

namespace gallai {

namespace {

// v1..v9 -> 0..8
constexpr std::array<Edge, 15> kH1Edges{{
    {0, 1}, {1, 3}, {3, 4}, {4, 0},  // outer square v1 v2 v4 v5
    {0, 5}, {5, 4},                  // v6
    {0, 6}, {6, 7}, {7, 8}, {8, 4},  // v1 v7 v8 v9 v5
    {1, 2}, {2, 3},                  // v3
    {1, 6}, {6, 8}, {8, 3},          // v2 v7 v9 v4
}};

std::vector<std::string> numbered(std::string_view prefix, int count, int first = 1) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

Fixture plain(std::string name, Graph g) {
  Fixture f{std::move(name), std::move(g), {}, std::nullopt};
  f.labels = numbered("v", f.graph.order(), 0);
  return f;
}

}  // namespace

Graph h1_graph() { return Graph::from_edge_list(9, kH1Edges); }

Graph h2_graph() {
  std::vector<Edge> edges;
  for (Edge e : kH1Edges)
    if (e != Edge{4, 0}) edges.push_back(e);
  return Graph::from_edge_list(9, edges);
}

Graph wvz12_graph() {
  // Petersen: outer cycle p0..p4, spokes p_i p_{i+5}, inner pentagram.
  std::vector<Edge> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  // Drop p0 (neighbours p1, p4, p5); p_k -> k-1 for k >= 1.
  std::vector<Edge> edges;
  for (auto [u, v] : petersen)
    if (u != 0 && v != 0) edges.emplace_back(u - 1, v - 1);
  edges.emplace_back(0, 9);   // pendant at p1
  edges.emplace_back(3, 10);  // pendant at p4
  edges.emplace_back(4, 11);  // pendant at p5
  return Graph::from_edge_list(12, edges);
}

Fixture make_fixture(std::string_view name) {
  if (name == "wvz12") {
    Fixture f{"wvz12", wvz12_graph(), numbered("p", 9, 1), std::nullopt};
    for (auto s : {"t1", "t4", "t5"}) f.labels.emplace_back(s);
    return f;
  }
  if (name == "h1") return {"h1", h1_graph(), numbered("v", 9), std::nullopt};
  if (name == "h2") return {"h2", h2_graph(), numbered("v", 9), std::nullopt};
  if (name == "n111") return plain("n111", build_N(1, 1, 1));
  if (name == "z1") return plain("z1", build_N(1, 0, 0));
  if (name == "z2") return plain("z2", build_N(2, 0, 0));
  if (name == "z3") return plain("z3", build_N(3, 0, 0));
  if (name == "b11") return plain("b11", build_N(1, 1, 0));
  if (name == "b12") return plain("b12", build_N(1, 2, 0));
  if (name == "k13") return plain("k13", star_graph(3));
  if (name == "p4") return plain("p4", path_graph(4));
  if (name == "p5") return plain("p5", path_graph(5));
  if (name == "p6") return plain("p6", path_graph(6));
  if (name.starts_with("comb:")) {
    BuiltComb built = build_comb(parse_comb_parameters(name.substr(5)));
    Fixture f{std::string(name), std::move(built.graph), {}, std::move(built.decomposition)};
    f.labels = numbered("c", static_cast<int>(f.comb->base.size()), 0);
    for (std::size_t i = 0; i < f.comb->leaves.size(); ++i)
      for (std::size_t k = 0; k < f.comb->leaves[i].size(); ++k)
        f.labels.push_back("l" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
    return f;
  }
  throw Error(ErrorCode::UnknownFixture, std::string(name));
}

std::vector<std::string> fixture_names() {
  return {"wvz12", "h1", "h2", "n111", "z1", "z2", "z3", "b11", "b12", "k13", "p4", "p5", "p6", "comb:<m;|C|;R-sizes;L-sizes>"};
}

}  // namespace gallai
