#include <algorithm>
#include <bit>
#include <cstdint>
#include <mutex>

#include "budget.hpp"
#include "shortness/errors.hpp"
#include "shortness/oracle.hpp"
#include "shortness/parallel.hpp"

namespace shortness::oracle {

std::string_view kind_name(ToughnessReport::Kind k) noexcept {
  switch (k) {
    case ToughnessReport::Kind::Exact: return "exact";
    case ToughnessReport::Kind::NoViolationFound: return "no_violation_found";
    case ToughnessReport::Kind::Violation: return "violation";
  }
  return "?";
}

namespace {

using Mask = std::uint64_t;

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;
  Mask all = 0;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
    all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

  // Components of G[keep], written to comps; returns their number.
  int components(Mask keep, std::array<Mask, 64>& comps) const {
    int k = 0;
    while (keep) {
      Mask comp = keep & (~keep + 1), frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
        next &= keep & ~comp;
        comp |= next;
        frontier = next;
      }
      comps[static_cast<std::size_t>(k++)] = comp;
      keep &= ~comp;
    }
    return k;
  }
};

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

struct Candidate {
  bool set = false;
  Rational ratio;
  std::vector<Vertex> cut;
  int components = 0;

  void offer(const Rational& r, Mask s, int c) {
    if (set && r > ratio) return;
    auto v = members(s);
    if (set && r == ratio && !(v < cut)) return;
    set = true;
    ratio = r;
    cut = std::move(v);
    components = c;
  }
  void merge(const Candidate& o) {
    if (!o.set) return;
    if (!set || o.ratio < ratio || (o.ratio == ratio && o.cut < cut)) *this = o;
  }
};

// Next integer with the same popcount (Gosper).
Mask next_combination(Mask x) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

ToughnessReport toughness_exact(const Graph& g, const SearchBudget& budget, bool restricted) {
  const int n = g.order();
  if (n > 64) throw Error(ErrorKind::InvalidInput, "toughness_exact supports at most 64 vertices");
  ToughnessReport rep;
  rep.kind = ToughnessReport::Kind::Exact;
  detail::BudgetClock clock(budget);
  if (g.is_complete()) {
    rep.value = Toughness::infinity();
    rep.components = n > 0 ? 1 : 0;
    rep.stats = clock.stats(true);
    return rep;
  }
  const MaskGraph mg(g);
  std::array<Mask, 64> comps{};
  const int c0 = mg.components(mg.all, comps);
  if (c0 >= 2) {
    rep.value = Toughness::of(Rational(0));
    rep.components = c0;
    rep.stats = clock.stats(true);
    return rep;
  }

  // Start from N(v) for a non-universal vertex v of minimum degree.
  Candidate best;
  {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (g.degree(u) < n - 1 && (v < 0 || g.degree(u) < g.degree(v))) v = u;
    const Mask s = mg.adj[static_cast<std::size_t>(v)];
    const int c = mg.components(mg.all & ~s, comps);
    if (!restricted) best.offer(Rational(std::popcount(s), c), s, c);
    // under the restriction the seed only bounds the search; it is not a candidate
    else best.ratio = Rational(std::popcount(s), c);
  }
  const int alpha = max_independent_set_size(g);

  std::mutex mu;
  for (int s = 1; s <= n - 2; ++s) {
    const int cmax = std::min(alpha, n - s);
    if (cmax < 2) continue;
    const Rational floor(s, cmax);
    if (floor > best.ratio) break;
    const Rational limit = best.ratio;
    std::vector<Candidate> found(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n - s + 1), budget.threads, [&](std::size_t lo) {
      const int low = static_cast<int>(lo);
      Candidate& local = found[lo];
      const int rest = n - low - 1;
      if (rest < s - 1) return;
      const Mask head = Mask{1} << low;
      const Mask top = rest == 64 ? 0 : Mask{1} << rest;
      Mask x = s == 1 ? 0 : (Mask{1} << (s - 1)) - 1;
      std::array<Mask, 64> cs{};
      for (;;) {
        if (clock.tick()) return;
        const Mask set = head | (x << (low + 1));
        const int c = mg.components(mg.all & ~set, cs);
        if (c >= 2) {
          const Rational r(s, c);
          if (r <= limit && (!local.set || r <= local.ratio)) {
            bool ok = true;
            if (restricted) {
              for (Mask m = set; m && ok; m &= m - 1) {
                const Mask nb = mg.adj[static_cast<std::size_t>(std::countr_zero(m))];
                int touch = 0;
                for (int i = 0; i < c && touch < 2; ++i) touch += (cs[static_cast<std::size_t>(i)] & nb) != 0;
                ok = touch >= 2;
              }
            }
            if (ok) local.offer(r, set, c);
          }
        }
        if (s == 1) break;
        x = next_combination(x);
        if (top != 0 ? x >= top : x == 0) break;
      }
    });
    if (clock.exhausted())
      throw BudgetExceededError("toughness: budget exhausted at cut size " + std::to_string(s) +
                                    "; best ratio so far " + (best.set ? best.ratio.str() : std::string("none")),
                                -1);
    for (const auto& f : found) best.merge(f);
  }
  if (!best.set) throw Error(ErrorKind::InvalidInput, "no separating set found");
  rep.value = Toughness::of(best.ratio);
  rep.cut = VertexCut(best.cut);
  rep.components = best.components;
  rep.stats = clock.stats(true);
  return rep;
}

VertexCut canonicalize_cut(const Graph& g, const VertexCut& s, const TRegion& region, const Rational& t) {
  if (t < Rational(1)) throw Error(ErrorKind::InvalidInput, "canonicalize_cut needs t >= 1");
  std::vector<Vertex> on;
  for (Vertex o : region.outer)
    if (s.contains(o)) on.push_back(o);
  if (on.size() <= 1) throw Error(ErrorKind::NotApplicable, "cut meets the region's outer triangle in at most one vertex");

  std::vector<Vertex> out;
  for (Vertex v : s.members)
    if (!region.contains_inner(v)) out.push_back(v);
  if (on.size() == 2) {
    out.push_back(region.common_inner_neighbor(on[0], on[1]));
  } else {
    auto grey = region.grey;
    std::sort(grey.begin(), grey.end());
    out.push_back(grey[0]);
    out.push_back(grey[1]);
  }
  VertexCut result(out);

  auto violates = [&](const VertexCut& x) {
    if (static_cast<int>(x.size()) >= g.order()) return false;
    const auto c = static_cast<std::int64_t>(components_after_cut(g, x).count);
    return static_cast<__int128>(c) * t.num() > static_cast<__int128>(x.size()) * t.den();
  };
  if (violates(s) && !violates(result))
    throw Error(ErrorKind::ReconstructionInvalid, "canonical cut lost the violation; region is not a T-region");
  return result;
}

Graph strip_simplicial(const Graph& g, std::optional<Vertex> v) {
  const auto simp = simplicial_vertices(g);
  if (v) {
    if (!std::binary_search(simp.begin(), simp.end(), *v))
      throw Error(ErrorKind::NoSimplicialVertex, "vertex " + std::to_string(*v) + " is not simplicial");
    return g.without_vertex(*v);
  }
  if (simp.empty()) throw Error(ErrorKind::NoSimplicialVertex, "graph has no simplicial vertex");
  return g.without_vertex(simp.front());
}

}  // namespace shortness::oracle
