#include "doctest.h"

#include "shortness/assembly.hpp"
#include "shortness/errors.hpp"
#include "shortness/oracle.hpp"

using namespace shortness;
using namespace shortness::oracle;

namespace {

Graph k4() { return Graph::from_adjacency({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}); }

// c(G - S) * t > |S|
bool violates(const Graph& g, const VertexCut& s, const Rational& t) {
  const auto c = components_after_cut(g, s).count;
  return c >= 2 && Rational(static_cast<std::int64_t>(s.size()), c) < t;
}

}  // namespace

TEST_CASE("exact toughness of small graphs") {
  CHECK(toughness_exact(k4()).value.infinite);

  auto t = build_T();
  auto r = toughness_exact(t.graph.graph());
  CHECK(r.value.value == Rational(3, 2));
  CHECK(r.components == 2);
  CHECK(components_after_cut(t.graph.graph(), r.cut).count == 2);
  // the cut {o1, o2, g3} leaves w3 alone
  VertexCut s({t.vertex("o1"), t.vertex("o2"), t.vertex("g3")});
  CHECK(components_after_cut(t.graph.graph(), s).count == 2);

  CHECK(toughness_exact(build_F20().graph.graph()).value.value == Rational(7, 6));
  CHECK(toughness_exact(add_apex(build_F20()).graph.graph()).value.value == Rational(8, 7));
}

TEST_CASE("restricted enumeration matches the full one") {
  for (const auto& b : {build_T(), build_F20(), add_apex(build_F20())}) {
    const Graph& g = b.graph.graph();
    CHECK(toughness_exact(g, {}, true).value.value == toughness_exact(g, {}, false).value.value);
  }
}

TEST_CASE("sweep agrees with enumeration") {
  for (const auto& b : {build_T(), build_F20(), add_apex(build_F20()), build_fan(2), build_family({3, 1})}) {
    auto a = toughness_exact(b.graph.graph());
    auto s = toughness_by_search(b);
    CHECK(s.kind == ToughnessReport::Kind::Exact);
    CHECK(a.value.value == s.value.value);
    CHECK(Rational(static_cast<std::int64_t>(s.cut.size()), s.components) == s.value.value);
  }
}

TEST_CASE("F31 toughness") { CHECK(toughness_exact(build_family({3, 1}).graph.graph()).value.value == Rational(5, 4)); }

TEST_CASE("simplicial vertices do not raise toughness") {
  auto t = build_T();
  const Graph& g = t.graph.graph();
  auto h = strip_simplicial(g, t.vertex("w1"));
  CHECK(h.order() == 8);
  CHECK(toughness_exact(g).value.value <= toughness_exact(h).value.value);
  CHECK_THROWS_AS(strip_simplicial(g, t.vertex("g1")), Error);

  auto f = build_F20();
  const auto base = toughness_exact(f.graph.graph()).value.value;
  for (Vertex w : f.whites()) CHECK(base <= toughness_exact(strip_simplicial(f.graph.graph(), w)).value.value);
}

TEST_CASE("canonical cuts") {
  auto t = build_T();
  const Graph& g = t.graph.graph();
  const TRegion& r = t.regions.front();
  VertexCut all_outer({r.outer[0], r.outer[1], r.outer[2], r.grey[0]});
  auto c3 = canonicalize_cut(g, all_outer, r, Rational(3, 2));
  CHECK(c3.size() == 5);
  try {
    (void)canonicalize_cut(g, VertexCut({r.outer[0], r.grey[1]}), r, Rational(1));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotApplicable);
  }
  auto c2 = canonicalize_cut(g, VertexCut({r.outer[0], r.outer[1]}), r, Rational(3, 2));
  CHECK(c2.contains(r.common_inner_neighbor(r.outer[0], r.outer[1])));
}

TEST_CASE("canonical cuts keep every violation of F20+") {
  auto b = add_apex(build_F20());
  const Graph& g = b.graph.graph();
  REQUIRE(b.regions.size() == 1);
  const TRegion& r = b.regions.front();
  // 8/7 is the exact value; 6/5 admits violations
  const Rational t(6, 5);
  const int n = g.order();
  int checked = 0;
  for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) {
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    VertexCut cut(s);
    if (!violates(g, cut, t)) continue;
    int on = 0;
    for (Vertex o : r.outer) on += cut.contains(o);
    if (on < 2) continue;
    CHECK(violates(g, canonicalize_cut(g, cut, r, t), t));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("F10 toughness by search") {
  auto f10 = build_F10();
  auto low = toughness_search(f10, Rational(5, 4));
  CHECK(low.kind == ToughnessReport::Kind::NoViolationFound);
  CHECK(low.stats.complete);
  auto high = toughness_search(f10, Rational(3, 2));
  REQUIRE(high.kind == ToughnessReport::Kind::Violation);
  CHECK(high.value.value <= Rational(5, 4));
  CHECK(violates(f10.graph.graph(), high.cut, Rational(3, 2)));
  // without the canonical reduction the answer is the same
  auto plain = toughness_search(f10, Rational(5, 4), {}, false);
  CHECK(plain.kind == ToughnessReport::Kind::NoViolationFound);
  CHECK(plain.stats.complete);
  auto plus = toughness_search(add_apex(f10), Rational(5, 4));
  CHECK(plus.kind == ToughnessReport::Kind::NoViolationFound);
  CHECK(plus.stats.complete);
}

TEST_CASE("budget exhaustion is reported") {
  SearchBudget tiny;
  tiny.max_nodes = 50;
  auto r = toughness_search(build_F10(), Rational(5, 4), tiny);
  CHECK(r.kind == ToughnessReport::Kind::NoViolationFound);
  CHECK_FALSE(r.stats.complete);
  CHECK_THROWS_AS(toughness_exact(build_family({3, 1}).graph.graph(), tiny), BudgetExceededError);
}

TEST_CASE("LP export") {
  auto lp = export_lp(build_T().graph.graph(), Rational(3, 2));
  CHECK(lp.find("Maximize") != std::string::npos);
  CHECK(lp.find(" violation:") != std::string::npos);
  CHECK(lp.find("Binary") != std::string::npos);
  CHECK(lp.rfind("End\n") == lp.size() - 4);
}
