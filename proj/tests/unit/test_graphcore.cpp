#include "doctest.h"

#include "shortness/blocks.hpp"
#include "shortness/errors.hpp"
#include "shortness/graph.hpp"
#include "shortness/io.hpp"
#include "shortness/rational.hpp"

using namespace shortness;

namespace {

Triangulation k4() {
  const std::vector<Face> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return Triangulation::from_faces(4, faces, {0, 1, 2});
}

Vertex id(const LabeledBlock& b, const char* l) { return b.vertex(l); }

}  // namespace

TEST_CASE("K4 embedding") {
  auto t = k4();
  CHECK(traverse_faces(t).size() == 4);
  CHECK(is_maximal_planar(t));
  CHECK(t.graph().is_complete());
  for (Vertex s = 0; s < 4; ++s) CHECK(components_after_cut(t.graph(), VertexCut({s})).count == 1);
  CHECK(components_after_cut(t.graph(), VertexCut({0, 1, 2})).count == 1);
  CHECK_THROWS_AS(components_after_cut(t.graph(), VertexCut({0, 1, 2, 3})), Error);
  CHECK(simplicial_vertices(t.graph()).size() == 4);
}

TEST_CASE("K4 minus an edge is a valid embedding but not maximal planar") {
  // edge 1-3 removed: faces (0,1,2), (0,2,3), (0,3,2,1)
  std::vector<std::vector<Vertex>> rot{{1, 3, 2}, {2, 0}, {3, 1, 0}, {0, 2}};
  auto t = Triangulation::from_rotation(rot, {0, 1, 2});
  CHECK(t.graph().size() == 5);
  CHECK(traverse_faces(t).size() == 3);
  CHECK_FALSE(is_maximal_planar(t));
}

TEST_CASE("non-planar rotation is rejected by face traversal") {
  // K4 with one rotation reversed gives a toroidal walk
  auto rot = k4().rotations();
  std::swap(rot[0][1], rot[0][2]);
  auto t = Triangulation::from_rotation(rot, {0, 1, 2});
  CHECK_THROWS_AS(traverse_faces(t), Error);
}

TEST_CASE("inconsistent faces are rejected") {
  const std::vector<Face> faces{{0, 1, 2}, {0, 1, 2}};
  CHECK_THROWS_AS(Triangulation::from_faces(3, faces, {0, 1, 2}), Error);
}

TEST_CASE("T structure") {
  auto t = build_T();
  const Graph& g = t.graph.graph();
  CHECK(g.order() == 9);
  CHECK(g.size() == 21);
  CHECK(traverse_faces(t.graph).size() == 14);
  CHECK(is_maximal_planar(t.graph));
  CHECK(simplicial_vertices(g).size() == 3);

  const Vertex o1 = id(t, "o1"), o2 = id(t, "o2"), o3 = id(t, "o3");
  const Vertex g3 = id(t, "g3");
  // {o1, o2, g3} cuts off the white in triangle o1 o2 g3
  auto parts = components_after_cut(g, VertexCut({o1, o2, g3}));
  CHECK(parts.count == 2);
  CHECK(parts.parts[0].size() + parts.parts[1].size() == 6);
  auto six = components_after_cut(g, VertexCut({o1, o2, o3, id(t, "g1"), id(t, "g2"), g3}));
  CHECK(six.count == 3);
  CHECK(components_after_cut(g, VertexCut{}).count == 1);

  CHECK(is_dominating(g, std::vector<Vertex>{o1, o2}));
  CHECK(is_dominating(g, std::vector<Vertex>{o2, o3}));
  CHECK(is_dominating(g, std::vector<Vertex>{o1, o3}));
  CHECK_FALSE(is_dominating(g, std::vector<Vertex>{id(t, "w1")}));
  std::vector<Vertex> all(9);
  for (Vertex v = 0; v < 9; ++v) all[static_cast<std::size_t>(v)] = v;
  CHECK(is_dominating(g, all));
}

TEST_CASE("rational parsing and ordering") {
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Rational(8, 7) < Rational(5, 4));
  CHECK(Rational(5, 4).ceil() == 2);
  CHECK(Rational(1).ceil() == 1);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Toughness::infinity().at_least(Rational(1000)));
}

TEST_CASE("JSON, edge list and DOT exports") {
  auto t = build_T();
  auto j = io::to_json(t.graph, t.color_names());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"n", "rotation", "outer_face", "labels", "colors"});
  std::vector<std::string> colors;
  auto back = io::triangulation_from_json(io::Json::parse(j.dump()), &colors);
  CHECK(back == t.graph);
  CHECK(colors == t.color_names());

  auto el = io::to_edge_list(t.graph.graph());
  auto g2 = io::from_edge_list(el);
  CHECK(g2.edges() == t.graph.graph().edges());
  CHECK(el.substr(0, 4) == "0 1\n");

  auto dot = io::to_dot(t.graph.graph());
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);

  auto plain = io::to_json(t.graph.graph());
  CHECK(plain["outer_face"].empty());
  auto doc = io::from_json(plain);
  CHECK_FALSE(doc.embedding.has_value());
  CHECK(doc.graph.edges() == t.graph.graph().edges());
}

TEST_CASE("max independent set") {
  CHECK(max_independent_set_size(k4().graph()) == 1);
  std::vector<Edge> cyc;
  for (int i = 0; i < 9; ++i) cyc.emplace_back(i, (i + 1) % 9);
  CHECK(max_independent_set_size(Graph::from_edges(9, cyc)) == 4);
}
