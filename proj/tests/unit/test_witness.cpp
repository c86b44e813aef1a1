#include "doctest.h"

#include <set>

#include "shortness/errors.hpp"
#include "shortness/witness.hpp"

using namespace shortness;
using namespace shortness::witness;

namespace {

int outer_edges(const Triangulation& t, const CycleWitness& w) {
  const Face& f = t.outer_face();
  const std::set<Vertex> o(f.begin(), f.end());
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    k += o.count(w.vertices[i]) && o.count(w.vertices[(i + 1) % w.size()]);
  return k;
}

const BaseCaseLedger& ledger() {
  static const BaseCaseLedger l = BaseCaseLedger::run();
  return l;
}

}  // namespace

TEST_CASE("base cycle fixtures") {
  const auto f10 = build_F10();
  const auto w1 = base_cycle(1, f10);
  CHECK(w1.size() == 94);
  CHECK(outer_edges(f10.graph, w1) == 1);
  const auto f20 = build_F20();
  const auto w2 = base_cycle(2, f20);
  CHECK(w2.size() == 14);
  CHECK(outer_edges(f20.graph, w2) == 1);
  CHECK_THROWS_AS(base_cycle_labels(3), Error);
}

TEST_CASE("witness lengths match c(i, n)") {
  const std::vector<FamilyId> ids = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {2, 3}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}};
  for (auto id : ids) {
    CAPTURE(id.family);
    CAPTURE(id.n);
    const auto w = build_witnessed(id);
    CHECK(verify_witness(w.graph.graph.graph(), w.cycle));
    CHECK(bounds::Nat(w.cycle.size()) == bounds::c(id.family, id.n));
    CHECK(w.graph.order() == build_family(id).order());
  }
  CHECK(build_cycle_witness({1, 0}).size() == 94);
  CHECK(build_cycle_witness({2, 1}).size() == 79);
  CHECK(build_cycle_witness({3, 2}).size() == 63);
}

TEST_CASE("witness ids refer to build_family") {
  const auto g = build_family({2, 1});
  CHECK(verify_witness(g.graph.graph(), build_cycle_witness({2, 1})));
}

TEST_CASE("family 3 cycle avoids the outer triangle and visits every sub-region") {
  const auto w = build_witnessed({3, 2});
  CHECK(outer_edges(w.graph.graph, w.cycle) == 0);
  const auto& g = w.graph.graph.graph();
  std::set<std::string> seen;
  for (Vertex v : w.cycle.vertices) {
    const auto& s = g.label(v);
    if (s.rfind("w", 0) == 0) seen.insert(s.substr(0, 2));
  }
  CHECK(seen == std::set<std::string>{"w1", "w2", "w3"});
}

TEST_CASE("verify_witness rejects broken sequences") {
  const auto w = build_witnessed({2, 0});
  const auto& g = w.graph.graph.graph();
  auto bad = w.cycle;
  std::swap(bad.vertices[0], bad.vertices[5]);
  CHECK_FALSE(verify_witness(g, bad));
  auto dup = w.cycle;
  dup.vertices.push_back(dup.vertices[3]);
  CHECK_FALSE(verify_witness(g, dup));
  auto path = w.cycle;
  path.closed = false;
  path.vertices.pop_back();
  CHECK(verify_witness(g, path));
  CHECK_FALSE(verify_witness(g, CycleWitness{{0, 99}, false}));
}

TEST_CASE("base case ledger") {
  for (const auto& c : ledger().cases()) {
    CAPTURE(c.name);
    CAPTURE(c.observed);
    CHECK(c.passed);
  }
  CHECK(ledger().cases().size() == 8);
}

TEST_CASE("certificates") {
  CHECK_THROWS_AS(certify_longest_cycle({1, 0}, BaseCaseLedger{}), Error);
  try {
    certify_longest_cycle({3, 1}, BaseCaseLedger{});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BaseCaseUnverified);
  }

  const auto c1 = certify_longest_cycle({1, 1}, ledger());
  CHECK(c1.bound == bounds::c(1, 1));
  CHECK(c1.derivation == Derivation::ArrangedBlock);
  CHECK(c1.detail.find("k = 22") != std::string::npos);

  const auto c3 = certify_longest_cycle({3, 2}, ledger());
  CHECK(c3.bound == 63);
  CHECK(c3.derivation == Derivation::SRecurrence);

  const auto g = build_family({3, 2});
  const auto j = to_json(c3, g.graph.graph());
  CHECK(j["bound"] == "63");
  const auto back = witness_from_json(j, g.graph.graph());
  CHECK(back.vertices == c3.witness.vertices);
  CHECK_THROWS_AS(witness_from_json(io::Json::parse(R"({"witness": ["nope"]})"), g.graph.graph()), Error);
}
