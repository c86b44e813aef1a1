#include "doctest.h"

#include <algorithm>
#include <map>

#include "shortness/assembly.hpp"
#include "shortness/bounds.hpp"
#include "shortness/errors.hpp"

using namespace shortness;

TEST_CASE("replace_K4_with_T") {
  auto t = build_T();
  REQUIRE(t.k4regions.size() == 3);
  auto one = replace_K4_with_T(t, t.k4regions[0]);
  CHECK(one.order() == 14);
  CHECK(is_maximal_planar(one.graph));
  // the other two regions survive, three fresh ones appear
  CHECK(one.k4regions.size() == 5);
  CHECK(one.vertex("w1.g1") >= 0);
  for (const auto& r : t.k4regions) {
    if (r.white == t.k4regions[0].white) continue;
    auto w = one.vertex(t.graph.label(r.white));
    CHECK(one.graph.graph().degree(w) == 3);
  }

  auto f31 = replace_all_K4(t);
  CHECK(f31.order() == 24);
  CHECK(is_maximal_planar(f31.graph));
  CHECK(f31.k4regions.size() == 9);
  CHECK(f31.regions.size() == 3);
}

TEST_CASE("family sizes and white counts") {
  auto f32 = build_family({3, 2});
  CHECK(f32.order() == 69);
  CHECK(f32.whites().size() == 27);
  CHECK(is_maximal_planar(f32.graph));

  auto f21 = build_family({2, 1});
  CHECK(f21.order() == 99);
  CHECK(f21.whites().size() == 36);
  CHECK(simplicial_vertices(f21.graph.graph()) == f21.whites());
  CHECK(is_maximal_planar(f21.graph));
  CHECK(f21.regions.size() == 12);

  auto f10 = build_family({1, 0});
  CHECK(f10.order() == 102);

  CHECK_THROWS_AS(build_family({1, 3}), Error);
}

TEST_CASE("expand_once hexagons are 2-regular") {
  auto block = arranged_F20();
  auto ex = expand_once_detailed(block.g0, block);
  CHECK(ex.result.order() == 99);
  REQUIRE(ex.hexagons.size() == 6);
  for (std::size_t c = 0; c < ex.hexagons.size(); ++c) {
    std::map<Vertex, int> deg;
    for (auto [u, v] : ex.hexagons[c]) {
      CHECK(ex.result.graph.graph().adjacent(u, v));
      ++deg[u];
      ++deg[v];
    }
    CHECK(deg.size() == 6);
    for (auto [v, d] : deg) CHECK(d == 2);
    // one side in the copy's outer face, the other in the old neighborhood
    int copy_side = 0;
    for (Vertex p : block.O) copy_side += deg.count(ex.copy_to_new[c][static_cast<std::size_t>(p)]);
    CHECK(copy_side == 3);
  }
}

TEST_CASE("F11 size") {
  auto f11 = build_family({1, 1});
  CHECK(f11.order() == 3132);
  CHECK(f11.whites().size() == 900);
  CHECK(is_maximal_planar(f11.graph));
}

TEST_CASE("arranged block invariants") {
  auto a = arranged_F20();
  CHECK(a.j == 15);
  CHECK(a.W.size() == 6);
  CHECK(a.k == 5);
  auto b = arranged_F10();
  CHECK(b.k == 22);
  CHECK(b.j == 102);
  CHECK_THROWS_AS(ArrangedBlock::make(build_F20(), 0, KCertificate::Supplied), Error);
}
