#include "doctest.h"

#include <algorithm>

#include "shortness/assembly.hpp"
#include "shortness/errors.hpp"
#include "shortness/gluelab.hpp"

using namespace shortness;
using namespace shortness::gluelab;

namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

// K4 marked at 3: N(v) = {0, 1, 2}
GlueSpec k4_pair(std::vector<Edge> cross) { return {complete(4), 3, complete(4), 3, std::move(cross)}; }

}  // namespace

TEST_CASE("glue basics") {
  const auto s = k4_pair({{0, 0}, {1, 1}, {2, 2}});
  const Graph u = glue(s);
  CHECK(u.order() == 4 + 4 - 2);
  CHECK(u.size() == 3 + 3 + 3);
  CHECK(u.adjacent(glued_id(s, 0, 1), glued_id(s, 1, 1)));
  CHECK(min_bipartite_degree(s) == 1);

  CHECK_FALSE(glue(k4_pair({})).is_connected());
  CHECK(min_bipartite_degree(k4_pair({{0, 0}})) == 0);
  std::vector<Edge> all;
  for (Vertex a = 0; a < 3; ++a)
    for (Vertex b = 0; b < 3; ++b) all.emplace_back(a, b);
  CHECK(min_bipartite_degree(k4_pair(all)) == 3);

  try {
    glue({complete(4), 3, complete(5), 0, {{3, 1}}});
    FAIL("expected InvalidCrossEdge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCrossEdge);
  }
}

TEST_CASE("one substitution is a gluing along the hexagon") {
  const ArrangedBlock block = arranged_F20();
  const LabeledBlock& prev = block.g0;
  const Expansion e = expand_once_detailed(prev, block);
  const LabeledBlock plus = add_apex(block.g0);
  const Vertex apex = block.g0.order();

  // U ids -> ids in e.result; whites still waiting map to -(old id) - 2
  Graph u = prev.graph.graph();
  std::vector<Vertex> to_new(static_cast<std::size_t>(u.order()));
  for (Vertex v = 0; v < u.order(); ++v) {
    const Vertex m = e.old_to_new[static_cast<std::size_t>(v)];
    to_new[static_cast<std::size_t>(v)] = m >= 0 ? m : -v - 2;
  }
  const auto u_id = [&](Vertex key) {
    return static_cast<Vertex>(std::find(to_new.begin(), to_new.end(), key) - to_new.begin());
  };
  for (std::size_t c = 0; c < e.replaced.size(); ++c) {
    const auto& cmap = e.copy_to_new[c];
    GlueSpec s{u, u_id(-e.replaced[c] - 2), plus.graph.graph(), apex, {}};
    for (auto [p, q] : e.hexagons[c]) {
      const bool p_in_copy = std::find(cmap.begin(), cmap.end(), p) != cmap.end();
      const Vertex y = p_in_copy ? p : q, a = p_in_copy ? q : p;
      const auto k = static_cast<Vertex>(std::find(cmap.begin(), cmap.end(), y) - cmap.begin());
      s.cross_edges.emplace_back(u_id(a), k);
    }
    CHECK(min_bipartite_degree(s) == 2);
    const Graph next = glue(s);
    std::vector<Vertex> next_new(static_cast<std::size_t>(next.order()));
    for (Vertex x = 0; x < u.order(); ++x)
      if (x != s.v1) next_new[static_cast<std::size_t>(glued_id(s, 0, x))] = to_new[static_cast<std::size_t>(x)];
    for (Vertex k = 0; k < apex; ++k) next_new[static_cast<std::size_t>(glued_id(s, 1, k))] = cmap[static_cast<std::size_t>(k)];
    u = next;
    to_new = std::move(next_new);
  }

  const Graph& target = e.result.graph.graph();
  REQUIRE(u.order() == target.order());
  CHECK(u.size() == target.size());
  bool same = true;
  for (auto [a, b] : u.edges()) same = same && target.adjacent(to_new[static_cast<std::size_t>(a)], to_new[static_cast<std::size_t>(b)]);
  CHECK(same);
}

TEST_CASE("preservation verdicts") {
  // two copies of K5 glued with min degree 3 >= ceil(3/2)
  std::vector<Edge> cross;
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 0; b < 4; ++b)
      if ((a + b) % 4 != 0) cross.emplace_back(a, b);
  const GlueSpec s{complete(5), 4, complete(5), 4, cross};
  const auto v = check_glue_preservation(s, Rational(3, 2));
  CHECK(v.status == Status::Holds);
  CHECK(v.g1_plus.infinite);
  CHECK(v.u.at_least(Rational(3, 2)));

  const auto weak = check_glue_preservation(k4_pair({{0, 0}, {1, 1}, {2, 2}}), Rational(3, 2));
  CHECK(weak.status == Status::NotApplicable);
  CHECK(weak.reason.find("min degree") != std::string::npos);
}

TEST_CASE("random triangulations") {
  std::mt19937_64 rng(3);
  for (int n = 4; n <= 14; ++n) {
    const auto t = random_maximal_planar(n, 3 * n, rng);
    CHECK(is_maximal_planar(t));
    CHECK(t.graph().size() == static_cast<std::size_t>(3 * n - 6));
  }
}

TEST_CASE("gluing harness") {
  const auto r = glue_harness(200, 11);
  CHECK(r.instances == 200);
  CHECK(r.holds == 200);
  CHECK(r.refuted == 0);
  CHECK(r.cut_failures == 0);
  CHECK(r.cut_checks > 0);
  for (const auto& f : r.failures) MESSAGE(f);
}

TEST_CASE("K4 to T replacement") {
  const auto t = build_T();
  LabeledBlock k4;
  k4.graph = Triangulation::from_faces(4, std::vector<Face>{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}, {0, 1, 2});
  k4.color = {Role::Plain, Role::Plain, Role::Plain, Role::White};
  refresh_regions(k4);
  const auto v = check_constr3_preservation(k4, k4.k4regions.at(0));
  CHECK(v.status == Status::Holds);
  CHECK(v.before.infinite);
  CHECK(v.after.value == Rational(3, 2));

  for (const auto& r : t.k4regions) {
    const auto w = check_constr3_preservation(t, r);
    CHECK(w.status == Status::Holds);
    CHECK(w.after.greater_than(Rational(1)));
  }

  // toughness exactly 1 is outside the lemma
  std::mt19937_64 rng(5);
  bool gated = false;
  for (int i = 0; i < 500 && !gated; ++i) {
    LabeledBlock b;
    b.graph = random_maximal_planar(8, 4, rng);
    const Graph& g = b.graph.graph();
    Vertex w = -1;
    for (Vertex x = 0; x < g.order(); ++x)
      if (g.degree(x) == 3) w = x;
    if (w < 0 || oracle::toughness_exact(g).value.value != Rational(1)) continue;
    b.color.assign(8, Role::Plain);
    b.color[static_cast<std::size_t>(w)] = Role::White;
    refresh_regions(b);
    CHECK(check_constr3_preservation(b, b.k4regions.at(0)).status == Status::NotApplicable);
    gated = true;
  }
  CHECK(gated);

  const auto h = constr3_harness(20, 13);
  CHECK(h.instances == 20);
  CHECK(h.holds == 20);
}

TEST_CASE("F31 keeps toughness above 1") {
  const auto g = build_family({3, 1});
  CHECK(oracle::toughness_exact(g.graph.graph()).value.greater_than(Rational(1)));
}

TEST_CASE("weak gluing hypothesis is refuted at 3/2") {
  const Rational t(3, 2);
  const auto h = find_weak_lemma_counterexample(t, 12, {}, 1);
  const auto& v = h.verdict;
  CHECK(v.g1_plus.at_least(t));
  CHECK(v.g1.at_least(t));
  CHECK(v.g2_plus.at_least(t));
  CHECK(v.g2.at_least(t));
  CHECK_FALSE(v.u.at_least(t));
  // only the degree condition separates it from the corrected statement
  CHECK(v.status == Status::NotApplicable);
  CHECK(v.min_degree >= 1);
  CHECK(v.min_degree < t.ceil());
  const Graph u = glue(h.spec);
  const auto c = components_after_cut(u, h.cut).count;
  CHECK(Rational(static_cast<std::int64_t>(h.cut.size()), c) < t);

  // every vertex of N(v1) and N(v2) meets a new edge
  for (Vertex a : h.spec.g1_plus.neighbors(h.spec.v1))
    CHECK(std::any_of(h.spec.cross_edges.begin(), h.spec.cross_edges.end(), [&](const Edge& e) { return e.first == a; }));

  const auto j = to_json(h.spec);
  const auto back = glue_spec_from_json(io::Json::parse(j.dump()));
  CHECK(back.cross_edges == h.spec.cross_edges);
  CHECK(glue(back).edges() == u.edges());
}

TEST_CASE("weak hypothesis at t = 1 is the corrected lemma") {
  try {
    find_weak_lemma_counterexample(Rational(1), 7, {.max_seconds = 30}, 1);
    FAIL("a counterexample at t = 1 would refute the gluing lemma");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFoundWithinBudget);
  }
}
