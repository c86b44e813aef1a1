#include "doctest.h"

#include <algorithm>
#include <set>

#include "shortness/assembly.hpp"
#include "shortness/blocks.hpp"

using namespace shortness;

TEST_CASE("T block") {
  auto t = build_T();
  CHECK(t.whites().size() == 3);
  CHECK(find_T_regions(t).size() == 1);
  CHECK(find_K4_regions(t).size() == 3);
  const auto& r = t.regions[0];
  CHECK(r.outer == std::array<Vertex, 3>{t.vertex("o1"), t.vertex("o2"), t.vertex("o3")});
  CHECK(r.grey[2] == t.vertex("g3"));
  CHECK(r.white[0] == t.vertex("w1"));
  CHECK(r.common_inner_neighbor(t.vertex("o1"), t.vertex("o2")) == t.vertex("g3"));
  const Graph& g = t.graph.graph();
  // each white plus its neighborhood is K4
  for (Vertex w : t.whites()) {
    auto nb = g.neighbors(w);
    CHECK(nb.size() == 3);
    CHECK(g.adjacent(nb[0], nb[1]));
    CHECK(g.adjacent(nb[1], nb[2]));
    CHECK(g.adjacent(nb[0], nb[2]));
  }
}

TEST_CASE("F20 block") {
  auto b = build_F20();
  CHECK(b.order() == 15);
  CHECK(b.whites().size() == 6);
  CHECK(simplicial_vertices(b.graph.graph()).size() == 6);
  CHECK(traverse_faces(b.graph).size() == 26);
  REQUIRE(b.regions.size() == 2);
  std::set<Vertex> inner;
  for (const auto& r : b.regions)
    for (Vertex v : r.inner()) CHECK(inner.insert(v).second);
  CHECK(inner.size() + 3 == 15);
  for (Vertex v : b.graph.outer_face()) CHECK(b.color[static_cast<std::size_t>(v)] == Role::Grey);

  auto plus = add_apex(b);
  CHECK(plus.order() == 16);
  CHECK(plus.graph.graph().degree(15) == 3);
  CHECK(plus.graph.graph().size() == b.graph.graph().size() + 3);
  CHECK(is_maximal_planar(plus.graph));
  CHECK(find_T_regions(plus).size() == 1);
  CHECK(plus.color.back() == Role::ApexX);
}

TEST_CASE("F10 block") {
  auto b = build_F10();
  CHECK(b.order() == 102);
  CHECK(b.whites().size() == 30);
  CHECK(simplicial_vertices(b.graph.graph()).size() == 30);
  CHECK(b.regions.size() == 10);
  CHECK(is_maximal_planar(b.graph));
  const Vertex cp = b.vertex("c'");
  CHECK(b.graph.graph().degree(cp) == 20);
  auto plus = add_apex(b);
  CHECK(plus.order() == 103);
  CHECK(is_maximal_planar(plus.graph));
  CHECK(plus.regions.size() == 10);
}

TEST_CASE("small fans") {
  for (int r : {2, 3, 4}) {
    auto f = build_fan(r);
    CHECK(f.order() == 10 * r + 2);
    CHECK(static_cast<int>(f.regions.size()) == r);
  }
}

TEST_CASE("K4 regions are role driven") {
  LabeledBlock k4;
  const std::vector<Face> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  k4.graph = Triangulation::from_faces(4, faces, {0, 1, 2});
  k4.color.assign(4, Role::Plain);
  CHECK(find_K4_regions(k4).empty());
}
