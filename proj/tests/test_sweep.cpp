#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gallai/error.hpp"
#include "gallai/fixtures.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/patterns.hpp"
#include "gallai/sweep.hpp"
#include "oracles.hpp"

using namespace gallai;

TEST_SUITE("sweep") {
  TEST_CASE("mode names") {
    for (auto m : {SweepMode::GallaiMinimum, SweepMode::Theorem1, SweepMode::Theorem4, SweepMode::Theorem5,
                   SweepMode::Problem2})
      CHECK(parse_sweep_mode(to_string(m)) == m);
    CHECK_THROWS_AS(parse_sweep_mode("theorem9"), Error);
  }

  TEST_CASE("all graphs on four vertices from a graph6 file") {
    std::ifstream in(std::string(GALLAI_TEST_DATA) + "/atlas4.g6");
    REQUIRE(in);
    const SweepResult r = sweep_graph6(in, SweepMode::GallaiMinimum, {});
    CHECK(r.total() == 11);
    CHECK(r.outcome("disconnected") == 5);
    CHECK(r.outcome("nonempty") == 6);
    CHECK(r.violations.empty());
    CHECK(r.decode_errors == 0);
  }

  TEST_CASE("bad lines are counted and skipped") {
    std::istringstream in("C~\nnot graph6!\nC?\n");
    const SweepResult r = sweep_graph6(in, SweepMode::GallaiMinimum, {});
    CHECK(r.decode_errors == 1);
    REQUIRE(r.decode_messages.size() == 1);
    CHECK(r.decode_messages.front().find("line 2") != std::string::npos);
    CHECK(r.total() == 2);
  }

  TEST_CASE("per-order totals match the enumerator") {
    SweepOptions o;
    o.max_n = 6;
    const SweepResult r = sweep_builtin(SweepMode::GallaiMinimum, o);
    REQUIRE(r.orders.size() == 6);
    for (const auto& order : r.orders) CHECK(order.total == oracle::connected_class_count(order.n));
    CHECK(r.outcome("nonempty") == r.total());
  }

  TEST_CASE("parallel summaries are identical to serial ones") {
    for (auto mode : {SweepMode::Theorem5, SweepMode::Theorem1, SweepMode::Problem2}) {
      SweepOptions serial;
      serial.max_n = 7;
      SweepOptions parallel = serial;
      parallel.jobs = 3;
      const auto a = sweep_builtin(mode, serial);
      const auto b = sweep_builtin(mode, parallel);
      CHECK(to_json(a, false).dump() == to_json(b, false).dump());
      CHECK(to_csv(a) == to_csv(b));
    }
  }

  TEST_CASE("theorem5 sweep on small orders is clean") {
    SweepOptions o;
    o.max_n = 7;
    const SweepResult r = sweep_builtin(SweepMode::Theorem5, o);
    CHECK(r.violations.empty());
    CHECK(r.outcome("certification_failed") == 0);
    CHECK(r.in_class("K1_3:P6") > 0);
  }

  TEST_CASE("empty intersection at 12 vertices is a finding, not a violation") {
    const SweepResult r = sweep_graphs({wvz12_graph()}, SweepMode::GallaiMinimum, {});
    CHECK(r.violations.empty());
    REQUIRE(r.findings.size() == 1);
    CHECK(r.findings.front().graph6 == to_graph6(wvz12_graph()));

    SweepOptions o;
    o.k = 2;
    const SweepResult p = sweep_graphs({wvz12_graph(), path_graph(3)}, SweepMode::Problem2, o);
    CHECK(p.outcome("all_k_tuples_intersect") == 1);
    CHECK(p.outcome("common_vertex") == 1);
  }

  TEST_CASE("restricting pairs") {
    SweepOptions o;
    o.max_n = 5;
    o.pairs = {PatternName::P4};
    const SweepResult r = sweep_builtin(SweepMode::Theorem5, o);
    CHECK(r.in_class("K1_3:P4") > 0);
    CHECK(r.in_class("K1_3:P6") == 0);
  }

  TEST_CASE("csv layout") {
    const SweepResult r = sweep_graphs({path_graph(3)}, SweepMode::GallaiMinimum, {});
    const std::string csv = to_csv(r);
    CHECK(csv.rfind("n,key,count\n", 0) == 0);
    CHECK(csv.find("3,nonempty,1") != std::string::npos);
  }
}
