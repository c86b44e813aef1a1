#include "doctest.h"

#include "shortness/assembly.hpp"
#include "shortness/errors.hpp"
#include "shortness/oracle.hpp"

using namespace shortness;
using namespace shortness::oracle;

TEST_CASE("longest cycles of small blocks") {
  auto t = build_T();
  auto r = longest_cycle_exact(t.graph.graph());
  CHECK(r.length == 9);
  CHECK(is_cycle(t.graph.graph(), r.witness.vertices));
  CHECK(longest_cycle_with_outer_edges(t.graph, 0).length == 9);
  CHECK(longest_cycle_with_outer_edges(t.graph, 1).length == 9);
  CHECK(longest_cycle_with_outer_edges(t.graph, 2).length == 8);
  CHECK(longest_cycle_with_outer_edges(t.graph, 3).length == 3);

  auto f20 = build_F20();
  auto c20 = longest_cycle_exact(f20.graph.graph());
  CHECK(c20.length == 14);
  CHECK(is_cycle(f20.graph.graph(), c20.witness.vertices));
}

TEST_CASE("white bound") {
  CHECK(max_white_cycle(build_T()).whites == 3);
  auto w = max_white_cycle(build_F20());
  CHECK(w.whites == 5);
  CHECK(max_white_cycle(build_fan(2)).whites == 6);
}

TEST_CASE("longest paths") {
  CHECK(longest_path_exact(build_T().graph.graph()).length == 9);
  auto p = longest_path_exact(build_F20().graph.graph());
  MESSAGE("F20 longest path: " << p.length);
  CHECK(is_path(build_F20().graph.graph(), p.witness.vertices));
}

TEST_CASE("region pruning agrees with the plain search") {
  for (const auto& b : {build_T(), build_F20(), build_fan(2), build_family({3, 1})}) {
    CHECK(longest_cycle_exact(b).length == longest_cycle_exact(b.graph.graph()).length);
    for (int i = 0; i < 3; ++i)
      CHECK(longest_cycle_with_outer_edges(b, i).length == longest_cycle_with_outer_edges(b.graph, i).length);
  }
}

TEST_CASE("fan of three regions") {
  auto w = max_white_cycle(build_fan(3));
  CHECK(w.whites == 8);
  CHECK(w.stats.complete);
}

TEST_CASE("F10 has a 94-cycle through one outer edge") {
  auto f10 = build_F10();
  auto r = find_cycle_with_outer_edges(f10, 1, 94);
  REQUIRE(r);
  CHECK(r->length == 94);
  CHECK(is_cycle(f10.graph.graph(), r->witness.vertices));
}
