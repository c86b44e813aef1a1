#include <algorithm>
#include <functional>

#include "shortness/errors.hpp"
#include "shortness/witness.hpp"

namespace shortness::witness {

bool verify_witness(const Graph& g, const CycleWitness& w) {
  for (Vertex v : w.vertices)
    if (v < 0 || v >= g.order()) return false;
  return w.closed ? oracle::is_cycle(g, w.vertices) : oracle::is_path(g, w.vertices);
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ConstructionFailed, what); }

// ---------------------------------------------------------------- families 1, 2

// Replaces every white on the cycle by the copy's base path.
CycleWitness splice(const Expansion& e, const CycleWitness& prev, const std::vector<Vertex>& base_path) {
  const auto& g = e.result.graph.graph();
  std::vector<int> copy_of;
  for (std::size_t c = 0; c < e.replaced.size(); ++c) {
    const auto v = static_cast<std::size_t>(e.replaced[c]);
    if (copy_of.size() <= v) copy_of.resize(v + 1, -1);
    copy_of[v] = static_cast<int>(c);
  }
  const auto map_old = [&](Vertex v) {
    const Vertex m = e.old_to_new[static_cast<std::size_t>(v)];
    if (m < 0) fail("two replaced whites are consecutive on the cycle");
    return m;
  };

  CycleWitness out;
  const std::size_t len = prev.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Vertex v = prev.vertices[i];
    if (e.old_to_new[static_cast<std::size_t>(v)] >= 0) {
      out.vertices.push_back(e.old_to_new[static_cast<std::size_t>(v)]);
      continue;
    }
    const int c = static_cast<std::size_t>(v) < copy_of.size() ? copy_of[static_cast<std::size_t>(v)] : -1;
    if (c < 0) fail("vertex " + std::to_string(v) + " vanished without a copy");
    const Vertex a = map_old(prev.vertices[(i + len - 1) % len]);
    const Vertex b = map_old(prev.vertices[(i + 1) % len]);
    std::vector<Vertex> path;
    path.reserve(base_path.size());
    for (Vertex u : base_path) path.push_back(e.copy_to_new[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)]);
    if (!(g.adjacent(a, path.front()) && g.adjacent(b, path.back()))) {
      std::reverse(path.begin(), path.end());
      if (!(g.adjacent(a, path.front()) && g.adjacent(b, path.back())))
        fail("copy " + std::to_string(c) + " cannot be entered from both cycle neighbours");
    }
    out.vertices.insert(out.vertices.end(), path.begin(), path.end());
  }
  return out;
}

WitnessedGraph build_substituted(FamilyId id, std::size_t max_vertices) {
  const ArrangedBlock block = id.family == 1 ? arranged_F10() : arranged_F20();
  // the fixture ends on the outer edge; as a path it runs front .. back
  const CycleWitness base = base_cycle(id.family, block.g0);
  WitnessedGraph w{block.g0, base};
  for (int level = 1; level <= id.n; ++level) {
    if (bounds::f(id.family, level) > max_vertices)
      throw Error(ErrorKind::BudgetExceeded, "F(" + std::to_string(id.family) + "," + std::to_string(level) +
                                                 ") is above the vertex limit");
    Expansion e = expand_once_detailed(w.graph, block);
    w.cycle = splice(e, w.cycle, base.vertices);
    w.graph = std::move(e.result);
  }
  return w;
}

// ---------------------------------------------------------------- family 3

// A region of F_{3,n} addressed by its label prefix. Depth 0 is a copy of T.
struct Region {
  std::string prefix;
  int depth = 0;
  std::array<Vertex, 3> outer{};
};

class Nested {
 public:
  explicit Nested(const LabeledBlock& b) : b_(b), g_(b.graph.graph()) {}

  std::string name(const Region& r, const std::string& s) const { return r.prefix.empty() ? s : r.prefix + "." + s; }
  Vertex grey(const Region& r, int i) const { return b_.vertex(name(r, "g" + std::to_string(i + 1))); }

  // index i with grey_i not adjacent to v
  int opp(const Region& r, Vertex v) const {
    for (int i = 0; i < 3; ++i)
      if (!g_.adjacent(grey(r, i), v)) return i;
    fail("no grey of " + r.prefix + " misses vertex " + g_.label(v));
  }
  Region sub(const Region& r, int i) const {
    Region s{name(r, "w" + std::to_string(i + 1)), r.depth - 1, {}};
    int k = 0;
    for (Vertex o : r.outer)
      if (g_.adjacent(grey(r, i), o)) s.outer[static_cast<std::size_t>(k++)] = o;
    if (k != 2) fail("grey of " + s.prefix + " does not see two outer vertices");
    s.outer[2] = grey(r, i);
    return s;
  }
  Region sub_opp(const Region& r, Vertex v) const { return sub(r, opp(r, v)); }

  // Hamiltonian path x -> y.
  std::vector<Vertex> A(const Region& r, Vertex x, Vertex y) const {
    if (r.depth == 0) return leaf_path(r, x, y, third(r, x, y));
    const Vertex z = third(r, x, y);
    const Vertex gz = grey(r, opp(r, z)), gy = grey(r, opp(r, y));
    auto p = B(sub_opp(r, z), x, gz, y);
    append(p, B(sub_opp(r, y), gy, z, x), 0);
    append(p, A(sub_opp(r, x), z, y), 1);
    return p;
  }
  // Path x -> y avoiding z.
  std::vector<Vertex> B(const Region& r, Vertex x, Vertex y, Vertex z) const {
    if (r.depth == 0) return leaf_path(r, x, y, z, true);
    const Vertex gz = grey(r, opp(r, z)), gy = grey(r, opp(r, y)), gx = grey(r, opp(r, x));
    auto p = B(sub_opp(r, z), x, gz, y);
    p.push_back(gy);
    append(p, B(sub_opp(r, x), gx, y, z), 0);
    return p;
  }
  // Cycle avoiding the region's outer edges.
  std::vector<Vertex> C0(const Region& r) const {
    const auto [x, y, z] = r.outer;
    if (r.depth == 0) return leaf_cycle(r);
    auto p = A(sub_opp(r, y), x, z);
    append(p, A(sub_opp(r, x), z, y), 1);
    auto last = A(sub_opp(r, z), y, x);
    p.insert(p.end(), last.begin() + 1, last.end() - 1);
    return p;
  }

 private:
  static void append(std::vector<Vertex>& p, const std::vector<Vertex>& q, std::size_t skip) {
    p.insert(p.end(), q.begin() + static_cast<std::ptrdiff_t>(skip), q.end());
  }
  Vertex third(const Region& r, Vertex x, Vertex y) const {
    for (Vertex o : r.outer)
      if (o != x && o != y) return o;
    fail("outer vertices of " + r.prefix + " are not distinct");
  }

  std::vector<Vertex> leaf_vertices(const Region& r) const {
    std::vector<Vertex> vs(r.outer.begin(), r.outer.end());
    for (const char* s : {"g1", "g2", "g3", "w1", "w2", "w3"}) vs.push_back(b_.vertex(name(r, s)));
    return vs;
  }
  bool leaf_edge(const Region& r, Vertex a, Vertex b) const {
    const auto outer = [&](Vertex v) { return std::find(r.outer.begin(), r.outer.end(), v) != r.outer.end(); };
    return g_.adjacent(a, b) && !(outer(a) && outer(b));
  }

  // Longest x -> y path inside the copy, skipping `avoid` when asked; the first
  // longest one in vertex-list order.
  std::vector<Vertex> leaf_path(const Region& r, Vertex x, Vertex y, Vertex avoid, bool skip = false) const {
    const auto vs = leaf_vertices(r);
    std::vector<Vertex> cur{x}, best;
    std::vector<char> used(vs.size(), 0);
    used[index(vs, x)] = 1;
    if (skip) used[index(vs, avoid)] = 1;
    std::function<void()> go = [&] {
      if (cur.back() == y) {
        if (cur.size() > best.size()) best = cur;
        return;
      }
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (used[i] || !leaf_edge(r, cur.back(), vs[i])) continue;
        used[i] = 1;
        cur.push_back(vs[i]);
        go();
        cur.pop_back();
        used[i] = 0;
      }
    };
    go();
    if (best.empty()) fail("no path inside " + r.prefix);
    return best;
  }
  std::vector<Vertex> leaf_cycle(const Region& r) const {
    const auto vs = leaf_vertices(r);
    const Vertex x = r.outer[0];
    std::vector<Vertex> best;
    for (Vertex y : vs) {
      if (y == x || !leaf_edge(r, y, x)) continue;
      auto p = leaf_path(r, x, y, x);
      if (p.size() > best.size()) best = p;
    }
    return best;
  }
  static std::size_t index(const std::vector<Vertex>& vs, Vertex v) {
    return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
  }

  const LabeledBlock& b_;
  const Graph& g_;
};

WitnessedGraph build_nested(FamilyId id, std::size_t max_vertices) {
  WitnessedGraph w{build_family(id, max_vertices), {}};
  const Nested nest(w.graph);
  const Region top{"", id.n, {w.graph.vertex("o1"), w.graph.vertex("o2"), w.graph.vertex("o3")}};
  w.cycle.vertices = nest.C0(top);
  return w;
}

}  // namespace

WitnessedGraph build_witnessed(FamilyId id, std::size_t max_vertices) {
  if (id.family < 1 || id.family > 3) throw Error(ErrorKind::InvalidInput, "family must be 1, 2 or 3");
  if (id.n < 0) throw Error(ErrorKind::InvalidInput, "depth must be non-negative");
  WitnessedGraph w = id.family == 3 ? build_nested(id, max_vertices) : build_substituted(id, max_vertices);
  if (!verify_witness(w.graph.graph.graph(), w.cycle)) fail("constructed sequence is not a cycle");
  if (bounds::Nat(w.cycle.size()) != bounds::c(id.family, id.n))
    fail("constructed cycle has " + std::to_string(w.cycle.size()) + " vertices, expected " +
         bounds::to_string(bounds::c(id.family, id.n)));
  return w;
}

CycleWitness build_cycle_witness(FamilyId id, std::size_t max_vertices) {
  return build_witnessed(id, max_vertices).cycle;
}

}  // namespace shortness::witness
