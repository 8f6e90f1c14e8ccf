#include <doctest.h>

#include <map>

#include "gallai/enumerate.hpp"
#include "gallai/error.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_SUITE("enumerate") {
  TEST_CASE("class counts match labeled enumeration, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(enumerate_connected_codes(n).size() == oracle::connected_class_count(n));
    }
  }

  TEST_CASE("order 7: connected and pairwise non-isomorphic") {
    const auto graphs = builtin_enumerate_connected(7);
    std::map<std::pair<std::size_t, std::vector<int>>, std::vector<const Graph*>> by_invariant;
    for (const Graph& g : graphs) {
      REQUIRE(g.order() == 7);
      REQUIRE(oracle::connected(g));
      std::vector<int> degrees;
      for (int v = 0; v < 7; ++v) degrees.push_back(g.degree(v));
      std::sort(degrees.begin(), degrees.end());
      by_invariant[{g.size(), degrees}].push_back(&g);
    }
    for (const auto& [key, group] : by_invariant)
      for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = i + 1; j < group.size(); ++j) REQUIRE_FALSE(oracle::isomorphic(*group[i], *group[j]));
  }

  TEST_CASE("codes are sorted and decode consistently") {
    const auto codes = enumerate_connected_codes(6);
    CHECK(std::is_sorted(codes.begin(), codes.end()));
    CHECK(std::adjacent_find(codes.begin(), codes.end()) == codes.end());
    const auto graphs = builtin_enumerate_connected(6);
    REQUIRE(graphs.size() == codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) CHECK(decode_graph(codes[i], 6) == graphs[i]);
  }

  TEST_CASE("order limits") {
    CHECK_THROWS_AS(enumerate_connected_codes(kMaxBuiltinOrder + 1), Error);
    CHECK_THROWS_AS(enumerate_connected_codes(0), Error);
  }
}
