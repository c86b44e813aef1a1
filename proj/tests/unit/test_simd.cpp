#include "doctest.h"

#include <numeric>
#include <random>

#include "shortness/assembly.hpp"
#include "shortness/oracle.hpp"
#include "shortness/simd.hpp"

using namespace shortness;
using namespace shortness::simd;

namespace {

// union-find reference
struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

int reference_components(const Graph& g, const VertexSet& alive, const VertexSet& marked, bool avoid) {
  Dsu d(g.order());
  for (auto [a, b] : g.edges())
    if (alive.test(a) && alive.test(b)) d.unite(a, b);
  std::vector<char> root_marked(static_cast<std::size_t>(g.order()), 0), seen(static_cast<std::size_t>(g.order()), 0);
  alive.for_each([&](int v) {
    if (marked.test(v)) root_marked[static_cast<std::size_t>(d.find(v))] = 1;
  });
  int k = 0;
  alive.for_each([&](int v) {
    const auto r = static_cast<std::size_t>(d.find(v));
    if (seen[r]) return;
    seen[r] = 1;
    k += !(avoid && root_marked[r]);
  });
  return k;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (keep(rng)) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

VertexSet random_set(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution in(p);
  VertexSet s;
  for (int v = 0; v < n; ++v)
    if (in(rng)) s.set(v);
  return s;
}

}  // namespace

TEST_CASE("kernel variants agree with union-find") {
  std::mt19937_64 rng(17);
  const bool avx = avx2_available();
  for (int it = 0; it < 300; ++it) {
    const int n = std::uniform_int_distribution<int>(1, kMaxVertices)(rng);
    const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.002, 0.05)(rng), rng);
    const BitGraph bg = BitGraph::from(g);
    const VertexSet alive = random_set(n, 0.8, rng), marked = random_set(n, 0.05, rng), seed = random_set(n, 0.02, rng);

    const int ref = reference_components(g, alive, marked, false);
    const int ref_avoid = reference_components(g, alive, marked, true);
    CHECK(generic::count_components(bg, alive) == ref);
    CHECK(generic::count_components_avoiding(bg, alive, marked) == ref_avoid);
    VertexSet nb;
    seed.for_each([&](int v) {
      for (Vertex u : g.neighbors(v)) nb.set(u);
    });
    CHECK(generic::neighborhood(bg, seed) == nb);
    const VertexSet cl = generic::closure(bg, seed, alive);
    CHECK((cl.minus(alive)).empty());
    if (avx) {
      CHECK(avx2::count_components(bg, alive) == ref);
      CHECK(avx2::count_components_avoiding(bg, alive, marked) == ref_avoid);
      CHECK(avx2::neighborhood(bg, seed) == nb);
      CHECK(avx2::closure(bg, seed, alive) == cl);
    }
  }
}

TEST_CASE("searches give the same answers under either kernel") {
  const auto f20 = build_F20();
  const auto fan = build_fan(3);
  std::vector<int> out;
  for (KernelIsa isa : {KernelIsa::Generic, KernelIsa::Avx2}) {
    if (isa == KernelIsa::Avx2 && !avx2_available()) continue;
    force_isa(isa);
    CHECK(active_isa() == isa);
    out.push_back(oracle::longest_cycle_exact(f20).length);
    out.push_back(oracle::max_white_cycle(fan).whites);
    out.push_back(oracle::longest_cycle_with_outer_edges(build_family({3, 1}), 2).length);
  }
  force_isa(avx2_available() ? KernelIsa::Avx2 : KernelIsa::Generic);
  CHECK(out[0] == 14);
  CHECK(out[1] == 8);
  CHECK(out[2] == 16);
  if (out.size() == 6) CHECK(std::equal(out.begin(), out.begin() + 3, out.begin() + 3));
  CHECK(isa_name(KernelIsa::Avx2) != isa_name(KernelIsa::Generic));
}
