#include <algorithm>
#include <numeric>
#include <random>

#include "shortness/acceptance.hpp"
#include "shortness/assembly.hpp"
#include "shortness/errors.hpp"
#include "shortness/gluelab.hpp"
#include "shortness/io.hpp"
#include "shortness/oracle.hpp"
#include "shortness/witness.hpp"

namespace shortness::properties {

void Report::fail(std::string msg) {
  ++failures;
  if (messages.size() < 5) messages.push_back(std::move(msg));
}

namespace {

std::vector<LabeledBlock> fixed_blocks() {
  return {build_T(), build_F20(), add_apex(build_F20()), build_F10(), add_apex(build_F10()), build_fan(3),
          build_family({2, 1}), build_family({3, 2})};
}

Triangulation random_tri(std::mt19937_64& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  return gluelab::random_maximal_planar(n, 2 * n, rng);
}

// G(n, p), not necessarily connected
Graph random_graph(std::mt19937_64& rng, int lo, int hi) {
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  const double p = std::uniform_real_distribution<double>(0.2, 0.7)(rng);
  std::bernoulli_distribution keep(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (keep(rng)) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

// min |S| / c(G - S) over every subset; nullopt when nothing separates
std::optional<Rational> brute_toughness(const Graph& g) {
  const int n = g.order();
  std::optional<Rational> best;
  for (std::uint32_t m = 0; m + 1 < (std::uint32_t{1} << n); ++m) {
    std::vector<Vertex> s;
    for (int v = 0; v < n; ++v)
      if (m >> v & 1) s.push_back(v);
    const int c = components_after_cut(g, VertexCut(s)).count;
    if (c < 2) continue;
    const Rational r(static_cast<std::int64_t>(s.size()), c);
    if (!best || r < *best) best = r;
  }
  return best;
}

std::vector<Vertex> random_perm(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

Report embedding_round_trips(std::uint64_t seed, int random_count) {
  Report r{"embedding round-trips", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Triangulation, std::vector<std::string>>> items;
  for (auto& b : fixed_blocks()) items.emplace_back(b.graph, b.color_names());
  for (int i = 0; i < random_count; ++i) items.emplace_back(random_tri(rng, 4, 30), std::vector<std::string>{});
  for (const auto& [t, colors] : items) {
    ++r.cases;
    const std::string tag = std::to_string(t.order()) + " vertices";
    try {
      std::vector<std::string> back_colors;
      const auto back = io::triangulation_from_json(io::Json::parse(io::to_json(t, colors).dump()), &back_colors);
      if (!(back == t) || back_colors != colors) r.fail("json: " + tag);
      if (io::from_edge_list(io::to_edge_list(t.graph())).edges() != t.graph().edges()) r.fail("edge list: " + tag);
      const auto plain = io::from_json(io::Json::parse(io::to_json(t.graph()).dump()));
      if (plain.graph.edges() != t.graph().edges() || plain.graph.labels() != t.graph().labels()) r.fail("plain json: " + tag);
      if (!is_maximal_planar(back) || back.triangles().size() != static_cast<std::size_t>(2 * t.order() - 4))
        r.fail("faces: " + tag);
    } catch (const Error& e) {
      r.fail(tag + ": " + e.what());
    }
  }
  return r;
}

Report witness_validation(std::uint64_t seed, int random_count) {
  Report r{"witness validation", 0, 0, {}};
  std::mt19937_64 rng(seed);
  const std::vector<FamilyId> ids = {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}};
  for (auto id : ids) {
    ++r.cases;
    const std::string tag = "F(" + std::to_string(id.family) + "," + std::to_string(id.n) + ")";
    const auto w = witness::build_witnessed(id);
    const Graph& g = w.graph.graph.graph();
    if (!witness::verify_witness(g, w.cycle)) r.fail(tag + ": witness rejected");
    auto dup = w.cycle;
    dup.vertices.push_back(dup.vertices[std::uniform_int_distribution<std::size_t>(0, dup.size() - 1)(rng)]);
    if (witness::verify_witness(g, dup)) r.fail(tag + ": repeated vertex accepted");
    auto out = w.cycle;
    out.vertices.back() = g.order();
    if (witness::verify_witness(g, out)) r.fail(tag + ": out-of-range vertex accepted");
    io::Json j;
    j["witness"] = io::Json::array();
    for (Vertex v : w.cycle.vertices) j["witness"].push_back(g.label(v));
    if (witness::witness_from_json(j, g).vertices != w.cycle.vertices) r.fail(tag + ": json round trip");
  }
  // oracle witnesses on random triangulations
  for (int i = 0; i < random_count; ++i) {
    ++r.cases;
    const auto t = random_tri(rng, 5, 14);
    const auto c = oracle::longest_cycle_exact(t.graph());
    const auto p = oracle::longest_path_exact(t.graph());
    if (!oracle::is_cycle(t.graph(), c.witness.vertices) || static_cast<int>(c.witness.size()) != c.length)
      r.fail("cycle witness on " + std::to_string(t.order()) + " vertices");
    if (!oracle::is_path(t.graph(), p.witness.vertices) || static_cast<int>(p.witness.size()) != p.length ||
        p.length < c.length)
      r.fail("path witness on " + std::to_string(t.order()) + " vertices");
  }
  return r;
}

Report cut_pruning_soundness(std::uint64_t seed, int random_count) {
  Report r{"cut-pruning soundness (<= 12 vertices)", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<Graph> corpus = {build_T().graph.graph(), add_apex(build_T()).graph.graph()};
  for (int i = 0; i < random_count; ++i) {
    corpus.push_back(random_tri(rng, 4, 12).graph());
    corpus.push_back(random_graph(rng, 3, 12));
  }
  for (const Graph& g : corpus) {
    ++r.cases;
    const std::string tag = std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges";
    const auto brute = brute_toughness(g);
    const auto full = oracle::toughness_exact(g, {}, false);
    const auto pruned = oracle::toughness_exact(g, {}, true);
    if (!brute) {
      if (!g.is_complete() || !full.value.infinite || !pruned.value.infinite) r.fail("complete graph: " + tag);
      continue;
    }
    if (full.value.infinite || full.value.value != *brute) r.fail("unrestricted differs: " + tag);
    if (pruned.value.infinite || pruned.value.value != *brute) r.fail("restricted differs: " + tag);
    // the sweep at a threshold just above and exactly at the value
    for (const Rational t : {*brute, Rational(brute->num() * 8 + 1, brute->den() * 8)}) {
      if (t <= Rational(0)) continue;
      const auto s = oracle::toughness_search(g, t);
      const bool violation = s.kind == oracle::ToughnessReport::Kind::Violation;
      if (violation != (*brute < t) || !s.stats.complete) r.fail("search at " + t.str() + ": " + tag);
    }
  }
  return r;
}

Report relabeling_invariance(std::uint64_t seed, int random_count) {
  Report r{"relabeling invariance of toughness", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<Graph> corpus = {build_T().graph.graph(), build_F20().graph.graph(), add_apex(build_F20()).graph.graph(),
                               build_family({3, 1}).graph.graph()};
  for (int i = 0; i < random_count; ++i) corpus.push_back(random_tri(rng, 5, 16).graph());
  for (const Graph& g : corpus) {
    ++r.cases;
    const auto a = oracle::toughness_exact(g);
    const auto perm = random_perm(g.order(), rng);
    const Graph h = g.permuted(perm);
    const auto b = oracle::toughness_exact(h);
    if (a.value.infinite != b.value.infinite || a.value.value != b.value.value)
      r.fail(std::to_string(g.order()) + " vertices: " + a.value.str() + " vs " + b.value.str());
    // the argmin cut carried across keeps its ratio
    if (!a.value.infinite) {
      std::vector<Vertex> moved;
      for (Vertex v : a.cut.members) moved.push_back(perm[static_cast<std::size_t>(v)]);
      const auto c = components_after_cut(h, VertexCut(moved)).count;
      if (Rational(static_cast<std::int64_t>(moved.size()), c) != a.value.value) r.fail("cut ratio changed");
    }
  }
  return r;
}

Report simplicial_monotonicity(std::uint64_t seed, int random_count) {
  Report r{"simplicial-vertex monotonicity", 0, 0, {}};
  std::mt19937_64 rng(seed);
  std::vector<Graph> corpus = {build_T().graph.graph(), build_F20().graph.graph()};
  for (int i = 0; i < random_count; ++i) corpus.push_back(random_tri(rng, 5, 14).graph());
  for (const Graph& g : corpus) {
    const auto before = oracle::toughness_exact(g).value;
    for (Vertex v : simplicial_vertices(g)) {
      ++r.cases;
      const auto after = oracle::toughness_exact(oracle::strip_simplicial(g, v)).value;
      if (!(after.infinite || (!before.infinite && before.value <= after.value)))
        r.fail(std::to_string(g.order()) + " vertices, v = " + std::to_string(v) + ": " + before.str() + " > " +
               after.str());
    }
  }
  return r;
}

std::vector<Report> run_all(std::uint64_t seed, bool quick) {
  const int k = quick ? 10 : 50;
  return {embedding_round_trips(seed, k), witness_validation(seed + 1, k), cut_pruning_soundness(seed + 2, k),
          relabeling_invariance(seed + 3, k), simplicial_monotonicity(seed + 4, k)};
}

}  // namespace shortness::properties
