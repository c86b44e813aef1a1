#include "shortness/gluelab.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "shortness/assembly.hpp"
#include "shortness/errors.hpp"
#include "shortness/parallel.hpp"

namespace shortness::gluelab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

bool in_nbhd(const Graph& g, Vertex v, Vertex u) { return u >= 0 && u < g.order() && g.adjacent(v, u); }

void check_marked(const Graph& g, Vertex v, const char* name) {
  if (v < 0 || v >= g.order()) throw Error(ErrorKind::InvalidInput, std::string(name) + " is not a vertex");
  if (g.order() < 2) throw Error(ErrorKind::InvalidInput, std::string(name) + " leaves an empty graph");
}

Toughness tough(const Graph& g, const oracle::SearchBudget& b) { return oracle::toughness_exact(g, b).value; }

int count_components(const Graph& g, const std::vector<Vertex>& cut) {
  if (static_cast<int>(cut.size()) >= g.order()) return 0;
  return components_after_cut(g, VertexCut(cut)).count;
}

}  // namespace

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::NotApplicable: return "not_applicable";
    case Status::Refuted: return "REFUTED";
  }
  return "?";
}

Vertex glued_id(const GlueSpec& s, int side, Vertex u) {
  if (side == 0) return u < s.v1 ? u : u - 1;
  const Vertex base = s.g1_plus.order() - 1;
  return base + (u < s.v2 ? u : u - 1);
}

Graph glue(const GlueSpec& s) {
  check_marked(s.g1_plus, s.v1, "v1");
  check_marked(s.g2_plus, s.v2, "v2");
  const int n1 = s.g1_plus.order() - 1;
  const int n = n1 + s.g2_plus.order() - 1;
  std::vector<Edge> edges;
  std::vector<std::string> labels(static_cast<std::size_t>(n));
  for (int side = 0; side < 2; ++side) {
    const Graph& g = side == 0 ? s.g1_plus : s.g2_plus;
    const Vertex v = side == 0 ? s.v1 : s.v2;
    for (Vertex u = 0; u < g.order(); ++u)
      if (u != v) labels[static_cast<std::size_t>(glued_id(s, side, u))] = (side == 0 ? "a." : "b.") + g.label(u);
    for (auto [a, b] : g.edges())
      if (a != v && b != v) edges.emplace_back(glued_id(s, side, a), glued_id(s, side, b));
  }
  std::set<Edge> cross;
  for (auto [a, b] : s.cross_edges) {
    if (!in_nbhd(s.g1_plus, s.v1, a) || !in_nbhd(s.g2_plus, s.v2, b))
      throw Error(ErrorKind::InvalidCrossEdge,
                  "cross edge (" + std::to_string(a) + ", " + std::to_string(b) + ") does not join N(v1) to N(v2)");
    cross.emplace(a, b);
  }
  for (auto [a, b] : cross) edges.emplace_back(glued_id(s, 0, a), glued_id(s, 1, b));
  return Graph::from_edges(n, edges, labels);
}

int min_bipartite_degree(const GlueSpec& s) {
  const std::set<Edge> cross(s.cross_edges.begin(), s.cross_edges.end());
  int best = -1;
  const auto take = [&](int d) { best = best < 0 ? d : std::min(best, d); };
  for (Vertex a : s.g1_plus.neighbors(s.v1))
    take(static_cast<int>(std::count_if(cross.begin(), cross.end(), [&](const Edge& e) { return e.first == a; })));
  for (Vertex b : s.g2_plus.neighbors(s.v2))
    take(static_cast<int>(std::count_if(cross.begin(), cross.end(), [&](const Edge& e) { return e.second == b; })));
  return std::max(best, 0);
}

GlueVerdict check_glue_preservation(const GlueSpec& s, const Rational& t, const oracle::SearchBudget& budget) {
  const Graph u = glue(s);
  GlueVerdict v;
  v.g1_plus = tough(s.g1_plus, budget);
  v.g1 = tough(s.g1_plus.without_vertex(s.v1), budget);
  v.g2_plus = tough(s.g2_plus, budget);
  v.g2 = tough(s.g2_plus.without_vertex(s.v2), budget);
  v.u = tough(u, budget);
  v.min_degree = min_bipartite_degree(s);
  std::string missing;
  const auto need = [&](const Toughness& x, const char* name) {
    if (!x.at_least(t)) missing += std::string(missing.empty() ? "" : ", ") + name + " = " + x.str() + " < " + t.str();
  };
  need(v.g1_plus, "G1+");
  need(v.g1, "G1");
  need(v.g2_plus, "G2+");
  need(v.g2, "G2");
  if (v.min_degree < t.ceil())
    missing += std::string(missing.empty() ? "" : ", ") + "bipartite min degree " + std::to_string(v.min_degree) +
               " < " + std::to_string(t.ceil());
  if (!missing.empty()) {
    v.status = Status::NotApplicable;
    v.reason = missing;
  } else if (v.u.at_least(t)) {
    v.status = Status::Holds;
    v.reason = "U = " + v.u.str() + " >= " + t.str();
  } else {
    v.status = Status::Refuted;
    v.reason = "hypotheses hold but U = " + v.u.str() + " < " + t.str();
  }
  return v;
}

Triangulation random_maximal_planar(int n, int flips, std::mt19937_64& rng) {
  if (n < 4) throw Error(ErrorKind::InvalidInput, "random triangulations need at least 4 vertices");
  std::vector<Face> faces = {{0, 1, 2}, {0, 2, 1}};
  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  const auto link = [&](Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].insert(b);
    adj[static_cast<std::size_t>(b)].insert(a);
  };
  link(0, 1);
  link(1, 2);
  link(0, 2);
  for (Vertex v = 3; v < n; ++v) {
    const auto i = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
    const auto [a, b, c] = faces[i];
    faces[i] = {a, b, v};
    faces.push_back({b, c, v});
    faces.push_back({c, a, v});
    link(a, v);
    link(b, v);
    link(c, v);
  }
  for (int k = 0; k < flips; ++k) {
    const auto i = std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng);
    const int r = std::uniform_int_distribution<int>(0, 2)(rng);
    const Vertex a = faces[i][static_cast<std::size_t>(r)], b = faces[i][static_cast<std::size_t>((r + 1) % 3)],
                 c = faces[i][static_cast<std::size_t>((r + 2) % 3)];
    // the face holding the dart b -> a
    std::size_t j = faces.size();
    Vertex d = -1;
    for (std::size_t f = 0; f < faces.size() && j == faces.size(); ++f)
      for (int e = 0; e < 3; ++e)
        if (faces[f][static_cast<std::size_t>(e)] == b && faces[f][static_cast<std::size_t>((e + 1) % 3)] == a) {
          j = f;
          d = faces[f][static_cast<std::size_t>((e + 2) % 3)];
        }
    if (j == faces.size() || c == d || adj[static_cast<std::size_t>(c)].count(d)) continue;
    if (adj[static_cast<std::size_t>(a)].size() <= 3 || adj[static_cast<std::size_t>(b)].size() <= 3) continue;
    faces[i] = {c, a, d};
    faces[j] = {d, b, c};
    adj[static_cast<std::size_t>(a)].erase(b);
    adj[static_cast<std::size_t>(b)].erase(a);
    link(c, d);
  }
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  return Triangulation::from_faces(n, faces, faces.front(), labels);
}

// ------------------------------------------------------------------ hunt

namespace {

struct Candidate {
  Graph plus;
  Vertex v = 0;
};

// Cross edges touching every vertex of both neighborhoods, built greedily:
// each uncovered vertex grabs a random partner, preferring uncovered ones.
std::vector<Edge> random_cover(const std::vector<Vertex>& n1, const std::vector<Vertex>& n2, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < static_cast<int>(n1.size()); ++i) order.emplace_back(0, i);
  for (int i = 0; i < static_cast<int>(n2.size()); ++i) order.emplace_back(1, i);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<char> c1(n1.size(), 0), c2(n2.size(), 0);
  std::set<Edge> out;
  for (auto [side, i] : order) {
    auto& mine = side == 0 ? c1 : c2;
    auto& other = side == 0 ? c2 : c1;
    if (mine[static_cast<std::size_t>(i)]) continue;
    std::vector<int> pick;
    for (int k = 0; k < static_cast<int>(other.size()); ++k)
      if (!other[static_cast<std::size_t>(k)]) pick.push_back(k);
    if (pick.empty())
      for (int k = 0; k < static_cast<int>(other.size()); ++k) pick.push_back(k);
    const int k = pick[std::uniform_int_distribution<std::size_t>(0, pick.size() - 1)(rng)];
    mine[static_cast<std::size_t>(i)] = 1;
    other[static_cast<std::size_t>(k)] = 1;
    out.insert(side == 0 ? Edge{n1[static_cast<std::size_t>(i)], n2[static_cast<std::size_t>(k)]}
                         : Edge{n1[static_cast<std::size_t>(k)], n2[static_cast<std::size_t>(i)]});
  }
  return {out.begin(), out.end()};
}

}  // namespace

HuntResult find_weak_lemma_counterexample(const Rational& t, int size_cap, const oracle::SearchBudget& budget,
                                          std::uint64_t seed) {
  if (size_cap < 4) throw Error(ErrorKind::InvalidInput, "size cap must be at least 4");
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  HuntResult res;

  // pool: a few random triangulations per size, marked at a min- and a max-degree vertex
  std::vector<Candidate> raw;
  constexpr int kPerSize = 6;
  for (int n = 4; n <= size_cap; ++n)
    for (int k = 0; k < kPerSize; ++k) {
      const Graph g = random_maximal_planar(n, 2 * n, rng).graph();
      Vertex lo = 0, hi = 0;
      for (Vertex v = 1; v < n; ++v) {
        if (g.degree(v) < g.degree(lo)) lo = v;
        if (g.degree(v) > g.degree(hi)) hi = v;
      }
      raw.push_back({g, lo});
      if (g.degree(hi) != g.degree(lo)) raw.push_back({g, hi});
    }
  std::vector<char> keep(raw.size(), 0);
  parallel_for(raw.size(), budget.threads, [&](std::size_t i) {
    oracle::SearchBudget one = budget;
    one.threads = 1;
    keep[i] = tough(raw[i].plus, one).at_least(t) && tough(raw[i].plus.without_vertex(raw[i].v), one).at_least(t);
  });
  std::vector<Candidate> pool;
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (keep[i]) pool.push_back(std::move(raw[i]));
  res.pool_size = pool.size();

  // pairs by total size, then sparse covers
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
    return pool[x.first].plus.order() + pool[x.second].plus.order() <
           pool[y.first].plus.order() + pool[y.second].plus.order();
  });
  constexpr int kCovers = 24;
  for (auto [i, j] : pairs) {
    if (since(t0) > budget.max_seconds) break;
    ++res.pairs_tried;
    GlueSpec s{pool[i].plus, pool[i].v, pool[j].plus, pool[j].v, {}};
    const auto n1 = std::vector<Vertex>(s.g1_plus.neighbors(s.v1).begin(), s.g1_plus.neighbors(s.v1).end());
    const auto n2 = std::vector<Vertex>(s.g2_plus.neighbors(s.v2).begin(), s.g2_plus.neighbors(s.v2).end());
    std::set<std::vector<Edge>> seen;
    for (int k = 0; k < kCovers; ++k) {
      auto cross = random_cover(n1, n2, rng);
      if (!seen.insert(cross).second) continue;
      ++res.gluings_tried;
      s.cross_edges = std::move(cross);
      const Graph u = glue(s);
      oracle::SearchBudget one = budget;
      one.max_seconds = std::max(0.0, budget.max_seconds - since(t0));
      const auto r = oracle::toughness_search(u, t, one);
      if (r.kind != oracle::ToughnessReport::Kind::Violation) continue;
      // re-verify every claim from scratch
      res.spec = s;
      res.verdict = check_glue_preservation(s, t, one);
      if (!res.verdict.g1_plus.at_least(t) || !res.verdict.g1.at_least(t) || !res.verdict.g2_plus.at_least(t) ||
          !res.verdict.g2.at_least(t) || res.verdict.u.at_least(t) || min_bipartite_degree(s) < 1)
        throw Error(ErrorKind::ReconstructionInvalid, "hunt candidate failed re-verification");
      res.cut = r.cut;
      res.components = r.components;
      res.seconds = since(t0);
      return res;
    }
  }
  throw Error(ErrorKind::NotFoundWithinBudget,
              "no counterexample: pool " + std::to_string(res.pool_size) + ", pairs " + std::to_string(res.pairs_tried) +
                  ", gluings " + std::to_string(res.gluings_tried) + ", " + std::to_string(since(t0)) + " s");
}

// ------------------------------------------------------------------ K4 -> T

Constr3Verdict check_constr3_preservation(const LabeledBlock& g, const K4Region& region,
                                          const oracle::SearchBudget& budget) {
  Constr3Verdict v;
  v.before = tough(g.graph.graph(), budget);
  if (!v.before.greater_than(Rational(1))) {
    v.status = Status::NotApplicable;
    v.reason = "toughness " + v.before.str() + " is not above 1";
    return v;
  }
  const LabeledBlock next = replace_K4_with_T(g, region);
  v.after = tough(next.graph.graph(), budget);
  v.status = v.after.greater_than(Rational(1)) ? Status::Holds : Status::Refuted;
  v.reason = v.before.str() + " -> " + v.after.str();
  return v;
}

// ------------------------------------------------------------------ harnesses

HarnessReport glue_harness(int count, std::uint64_t seed, const oracle::SearchBudget& budget) {
  std::mt19937_64 rng(seed);
  HarnessReport rep;
  const auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  for (int inst = 0; inst < count; ++inst) {
    GlueSpec s;
    std::uniform_int_distribution<int> size(4, 9);
    s.g1_plus = random_maximal_planar(size(rng), 12, rng).graph();
    s.g2_plus = random_maximal_planar(size(rng), 12, rng).graph();
    s.v1 = std::uniform_int_distribution<Vertex>(0, s.g1_plus.order() - 1)(rng);
    s.v2 = std::uniform_int_distribution<Vertex>(0, s.g2_plus.order() - 1)(rng);

    // t: the weakest of the four input values, so the inputs are t-tough
    Rational t(3);
    for (const Graph& g : {s.g1_plus, s.g1_plus.without_vertex(s.v1), s.g2_plus, s.g2_plus.without_vertex(s.v2)}) {
      const auto x = tough(g, budget);
      if (!x.infinite && x.value < t) t = x.value;
    }
    const auto d = static_cast<int>(t.ceil());
    const auto n1 = s.g1_plus.neighbors(s.v1);
    const auto n2 = s.g2_plus.neighbors(s.v2);
    std::set<Edge> cross;
    std::bernoulli_distribution extra(0.2);
    for (Vertex a : n1)
      for (Vertex b : n2)
        if (extra(rng)) cross.emplace(a, b);
    const auto top_up = [&](Vertex x, bool left) {
      std::vector<Vertex> other(left ? n2.begin() : n1.begin(), left ? n2.end() : n1.end());
      std::shuffle(other.begin(), other.end(), rng);
      int deg = 0;
      for (Vertex y : other) deg += cross.count(left ? Edge{x, y} : Edge{y, x}) > 0;
      for (Vertex y : other) {
        if (deg >= d) break;
        if (cross.emplace(left ? Edge{x, y} : Edge{y, x}).second) ++deg;
      }
    };
    for (Vertex a : n1) top_up(a, true);
    for (Vertex b : n2) top_up(b, false);
    s.cross_edges.assign(cross.begin(), cross.end());

    ++rep.instances;
    const auto v = check_glue_preservation(s, t, budget);
    if (v.status == Status::Holds) ++rep.holds;
    else if (v.status == Status::Refuted) ++rep.refuted, fail("instance " + std::to_string(inst) + ": " + v.reason);
    else fail("instance " + std::to_string(inst) + " missed its hypotheses: " + v.reason);

    // c(U - X) <= c(G1 - X1) + c(G2 - X2) on random cuts
    const Graph u = glue(s);
    const Graph g1 = s.g1_plus.without_vertex(s.v1), g2 = s.g2_plus.without_vertex(s.v2);
    std::bernoulli_distribution in(0.3);
    for (int k = 0; k < 100; ++k) {
      std::vector<Vertex> x, x1, x2;
      for (Vertex w = 0; w < u.order(); ++w)
        if (in(rng)) {
          x.push_back(w);
          (w < g1.order() ? x1 : x2).push_back(w < g1.order() ? w : w - g1.order());
        }
      if (static_cast<int>(x.size()) >= u.order()) continue;
      ++rep.cut_checks;
      if (count_components(u, x) > count_components(g1, x1) + count_components(g2, x2)) {
        ++rep.cut_failures;
        fail("instance " + std::to_string(inst) + ": cut inequality fails");
      }
    }
  }
  return rep;
}

HarnessReport constr3_harness(int count, std::uint64_t seed, const oracle::SearchBudget& budget) {
  std::mt19937_64 rng(seed);
  HarnessReport rep;
  for (int attempt = 0; rep.instances < count && attempt < 200 * count; ++attempt) {
    const int n = std::uniform_int_distribution<int>(5, 12)(rng);
    LabeledBlock b;
    b.graph = random_maximal_planar(n, n, rng);
    const Graph& g = b.graph.graph();
    std::vector<Vertex> deg3;
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 3) deg3.push_back(v);
    if (deg3.empty()) continue;
    if (!tough(g, budget).greater_than(Rational(1))) continue;
    b.color.assign(static_cast<std::size_t>(n), Role::Plain);
    b.color[static_cast<std::size_t>(deg3[std::uniform_int_distribution<std::size_t>(0, deg3.size() - 1)(rng)])] =
        Role::White;
    refresh_regions(b);
    ++rep.instances;
    const auto v = check_constr3_preservation(b, b.k4regions.at(0), budget);
    if (v.status == Status::Holds) ++rep.holds;
    else {
      if (v.status == Status::Refuted) ++rep.refuted;
      rep.failures.push_back("n = " + std::to_string(n) + ": " + std::string(status_name(v.status)) + " " + v.reason);
    }
  }
  if (rep.instances < count) rep.failures.push_back("only " + std::to_string(rep.instances) + " instances generated");
  return rep;
}

// ------------------------------------------------------------------ json

io::Json to_json(const GlueSpec& s) {
  io::Json j;
  j["g1_plus"] = io::to_json(s.g1_plus);
  j["v1"] = s.v1;
  j["g2_plus"] = io::to_json(s.g2_plus);
  j["v2"] = s.v2;
  auto& e = j["cross_edges"] = io::Json::array();
  for (auto [a, b] : s.cross_edges) e.push_back({a, b});
  return j;
}

GlueSpec glue_spec_from_json(const io::Json& j) {
  try {
    GlueSpec s;
    s.g1_plus = io::from_json(j.at("g1_plus")).graph;
    s.v1 = j.at("v1").get<Vertex>();
    s.g2_plus = io::from_json(j.at("g2_plus")).graph;
    s.v2 = j.at("v2").get<Vertex>();
    for (const auto& e : j.at("cross_edges")) s.cross_edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return s;
  } catch (const io::Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("glue spec: ") + e.what());
  }
}

}  // namespace shortness::gluelab
