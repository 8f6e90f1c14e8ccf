#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/comb.hpp"
#include "gallai/graph.hpp"

namespace gallai {

// Named graphs. Labels live beside the graph: labels[i] names vertex i.
struct Fixture {
  std::string name;
  Graph graph;
  std::vector<std::string> labels;
  std::optional<CombDecomposition> comb;
};

// H1 and H2: the two non-Hamiltonian 2-connected (K1_3, Z3)-free graphs,
// vertices v1..v9 -> 0..8. H2 is H1 without v1v5.
Graph h1_graph();
Graph h2_graph();

// 12-vertex graph whose longest paths have no common vertex: the Petersen
// graph minus one vertex, with a pendant edge at each of the three vertices
// that were adjacent to the removed one.
Graph wvz12_graph();

// wvz12, h1, h2, n111, z1, z2, z3, b11, b12, k13, p4, p5, p6, and
// comb:<m;|C|;R-sizes;L-sizes>. Throws UnknownFixture.
Fixture make_fixture(std::string_view name);
std::vector<std::string> fixture_names();

}  // namespace gallai
