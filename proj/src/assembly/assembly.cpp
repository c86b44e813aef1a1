#include "shortness/assembly.hpp"

#include <algorithm>
#include <set>

#include "shortness/bounds.hpp"
#include "shortness/errors.hpp"

namespace shortness {

std::string_view certificate_name(KCertificate k) noexcept {
  switch (k) {
    case KCertificate::Exhaustive: return "exhaustive";
    case KCertificate::FanFormula: return "fan_formula";
    case KCertificate::Supplied: return "supplied";
  }
  return "supplied";
}

ArrangedBlock ArrangedBlock::make(LabeledBlock g0, int k, KCertificate cert, int fan_r) {
  ArrangedBlock a;
  a.j = g0.order();
  a.W = g0.whites();
  a.O = g0.graph.outer_face();
  a.k = k;
  a.certificate = cert;
  a.fan_r = fan_r;
  const Graph& g = g0.graph.graph();
  auto fail = [](const std::string& m) { throw Error(ErrorKind::InvalidInput, "arranged block: " + m); };
  if (k < 1) fail("k must be positive");
  if (a.W.empty()) fail("no white vertices");
  const auto simp = simplicial_vertices(g);
  for (Vertex w : a.W) {
    if (!std::binary_search(simp.begin(), simp.end(), w)) fail("white vertex " + g.label(w) + " is not simplicial");
    for (Vertex x : a.O)
      if (x == w) fail("outer face meets W");
  }
  for (std::size_t i = 0; i < a.W.size(); ++i)
    for (std::size_t t = i + 1; t < a.W.size(); ++t)
      if (g.adjacent(a.W[i], a.W[t])) fail("white vertices adjacent");
  if (!g.adjacent(a.O[0], a.O[1]) || !g.adjacent(a.O[1], a.O[2]) || !g.adjacent(a.O[0], a.O[2])) fail("O is not a clique");
  if (cert == KCertificate::FanFormula && k != bounds::fan_white_bound(fan_r)) fail("k disagrees with the fan bound");
  a.g0 = std::move(g0);
  return a;
}

ArrangedBlock arranged_F10() { return ArrangedBlock::make(build_F10(), 22, KCertificate::FanFormula, 10); }
ArrangedBlock arranged_F20() { return ArrangedBlock::make(build_F20(), 5, KCertificate::Exhaustive); }

namespace {

std::vector<Vertex> whites_by_label(const LabeledBlock& b) {
  auto w = b.whites();
  std::sort(w.begin(), w.end(), [&](Vertex x, Vertex y) { return b.graph.label(x) < b.graph.label(y); });
  return w;
}

// Slot left by removing degree-3 vertex w: (a1, a3, a2) with a1 = rot[w][0].
Face slot_of(const Triangulation& t, Vertex w) {
  auto rot = t.rotation(w);
  if (rot.size() != 3) throw Error(ErrorKind::InvalidInput, "vertex " + t.label(w) + " does not have degree 3");
  return {rot[0], rot[2], rot[1]};
}

struct Rebuild {
  std::vector<Vertex> old_to_new;
  std::vector<std::string> labels;
  std::vector<Role> color;
  std::vector<Face> faces;
  int n = 0;

  // Keeps every vertex except `removed`, in id order, and every face avoiding them.
  Rebuild(const LabeledBlock& g, const std::vector<char>& removed) {
    old_to_new.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (removed[static_cast<std::size_t>(v)]) continue;
      old_to_new[static_cast<std::size_t>(v)] = n++;
      labels.push_back(g.graph.label(v));
      color.push_back(g.color[static_cast<std::size_t>(v)]);
    }
    for (const Face& f : g.graph.triangles()) {
      if (removed[static_cast<std::size_t>(f[0])] || removed[static_cast<std::size_t>(f[1])] ||
          removed[static_cast<std::size_t>(f[2])])
        continue;
      faces.push_back(map(f));
    }
  }

  Face map(const Face& f) const {
    return {old_to_new[static_cast<std::size_t>(f[0])], old_to_new[static_cast<std::size_t>(f[1])],
            old_to_new[static_cast<std::size_t>(f[2])]};
  }

  Vertex add(std::string label, Role r) {
    labels.push_back(std::move(label));
    color.push_back(r);
    return n++;
  }
};

}  // namespace

Expansion expand_once_detailed(const LabeledBlock& prev, const ArrangedBlock& block) {
  const auto whites = whites_by_label(prev);
  std::vector<char> removed(static_cast<std::size_t>(prev.order()), 0);
  for (Vertex w : whites) {
    if (prev.graph.graph().degree(w) != 3)
      throw Error(ErrorKind::InvalidInput, "white vertex " + prev.graph.label(w) + " does not have degree 3");
    removed[static_cast<std::size_t>(w)] = 1;
  }
  for (Vertex x : prev.graph.outer_face())
    if (removed[static_cast<std::size_t>(x)]) throw Error(ErrorKind::InvalidInput, "outer face contains a white vertex");

  Rebuild rb(prev, removed);
  Expansion ex;
  ex.replaced = whites;

  const LabeledBlock& g0 = block.g0;
  const Face p_old = block.O;
  const Face p_canon = canonical_face(p_old);
  const auto g0_faces = g0.graph.triangles();
  static constexpr int sigma[3] = {0, 2, 1};

  for (Vertex w : whites) {
    const std::string& wl = prev.graph.label(w);
    std::vector<Vertex> cmap(static_cast<std::size_t>(g0.order()));
    for (Vertex v = 0; v < g0.order(); ++v)
      cmap[static_cast<std::size_t>(v)] = rb.add(wl + "/" + g0.graph.label(v), g0.color[static_cast<std::size_t>(v)]);
    for (const Face& f : g0_faces) {
      if (canonical_face(f) == p_canon) continue;
      rb.faces.push_back({cmap[static_cast<std::size_t>(f[0])], cmap[static_cast<std::size_t>(f[1])],
                          cmap[static_cast<std::size_t>(f[2])]});
    }
    const Face alpha = rb.map(slot_of(prev.graph, w));
    Face p{};
    for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = cmap[static_cast<std::size_t>(p_old[static_cast<std::size_t>(i)])];
    std::set<Edge> hex;
    for (int i = 0; i < 3; ++i) {
      const auto a0 = alpha[static_cast<std::size_t>(i)], a1 = alpha[static_cast<std::size_t>((i + 1) % 3)];
      const auto q0 = p[static_cast<std::size_t>(i)], q1 = p[static_cast<std::size_t>((i + 1) % 3)];
      const auto ps = p[static_cast<std::size_t>(sigma[i])];
      const auto as = alpha[static_cast<std::size_t>(sigma[i])];
      rb.faces.push_back({a0, a1, ps});
      rb.faces.push_back({q0, q1, as});
      hex.emplace(std::min(a0, ps), std::max(a0, ps));
      hex.emplace(std::min(a1, ps), std::max(a1, ps));
      hex.emplace(std::min(q0, as), std::max(q0, as));
      hex.emplace(std::min(q1, as), std::max(q1, as));
    }
    if (hex.size() != 6) throw Error(ErrorKind::GluingNotPlanar, "hexagon at " + wl + " does not have 6 edges");
    std::array<Edge, 6> h{};
    std::copy(hex.begin(), hex.end(), h.begin());
    ex.hexagons.push_back(h);
    ex.copy_to_new.push_back(std::move(cmap));
  }

  LabeledBlock out;
  try {
    out.graph = Triangulation::from_faces(rb.n, rb.faces, rb.map(prev.graph.outer_face()), rb.labels);
  } catch (const Error& e) {
    throw Error(ErrorKind::GluingNotPlanar, e.what());
  }
  if (!is_maximal_planar(out.graph)) throw Error(ErrorKind::GluingNotPlanar, "expanded graph is not maximal planar");
  out.color = std::move(rb.color);
  for (const auto& cmap : ex.copy_to_new)
    for (const TRegion& r : g0.regions) {
      TRegion m;
      for (int i = 0; i < 3; ++i) {
        const auto k = static_cast<std::size_t>(i);
        m.outer[k] = cmap[static_cast<std::size_t>(r.outer[k])];
        m.grey[k] = cmap[static_cast<std::size_t>(r.grey[k])];
        m.white[k] = cmap[static_cast<std::size_t>(r.white[k])];
      }
      out.regions.push_back(m);
    }
  out.k4regions = find_K4_regions(out);
  ex.old_to_new = std::move(rb.old_to_new);
  ex.result = std::move(out);
  return ex;
}

LabeledBlock expand_once(const LabeledBlock& prev, const ArrangedBlock& block) {
  return std::move(expand_once_detailed(prev, block).result);
}

namespace {

LabeledBlock replace_k4_set(const LabeledBlock& g, std::vector<K4Region> regions) {
  std::sort(regions.begin(), regions.end(),
            [&](const K4Region& a, const K4Region& b) { return g.graph.label(a.white) < g.graph.label(b.white); });
  std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
  for (const K4Region& r : regions) {
    const Vertex w = r.white;
    if (w < 0 || w >= g.order() || g.color[static_cast<std::size_t>(w)] != Role::White || g.graph.graph().degree(w) != 3)
      throw Error(ErrorKind::InvalidInput, "K4-region white is not a degree-3 white vertex");
    auto rot = g.graph.rotation(w);
    if (!std::is_permutation(rot.begin(), rot.end(), r.outer.begin()))
      throw Error(ErrorKind::InvalidInput, "K4-region outer vertices do not match the white vertex's neighbors");
    removed[static_cast<std::size_t>(w)] = 1;
  }
  Rebuild rb(g, removed);
  static constexpr const char* names[6] = {"g1", "g2", "g3", "w1", "w2", "w3"};
  for (const K4Region& r : regions) {
    const std::string& wl = g.graph.label(r.white);
    std::array<Vertex, 6> fresh{};
    for (int i = 0; i < 6; ++i) fresh[static_cast<std::size_t>(i)] = rb.add(wl + "." + names[i], i < 3 ? Role::Grey : Role::White);
    const auto fs = t_faces(rb.map(slot_of(g.graph, r.white)), fresh);
    rb.faces.insert(rb.faces.end(), fs.begin(), fs.end());
  }
  LabeledBlock out;
  out.graph = Triangulation::from_faces(rb.n, rb.faces, rb.map(g.graph.outer_face()), rb.labels);
  out.color = std::move(rb.color);
  refresh_regions(out);
  return out;
}

}  // namespace

LabeledBlock replace_K4_with_T(const LabeledBlock& g, const K4Region& region) { return replace_k4_set(g, {region}); }

LabeledBlock replace_all_K4(const LabeledBlock& g) { return replace_k4_set(g, g.k4regions); }

LabeledBlock build_F30() { return build_T(); }

LabeledBlock build_family(FamilyId id, std::size_t max_vertices) {
  const auto size = bounds::f(id.family, id.n);
  if (size > max_vertices)
    throw Error(ErrorKind::BudgetExceeded, "F(" + std::to_string(id.family) + "," + std::to_string(id.n) + ") has " +
                                               bounds::to_string(size) + " vertices, above the limit of " +
                                               std::to_string(max_vertices));
  if (id.family == 3) {
    LabeledBlock g = build_F30();
    for (int t = 0; t < id.n; ++t) g = replace_all_K4(g);
    return g;
  }
  const ArrangedBlock block = id.family == 1 ? arranged_F10() : arranged_F20();
  LabeledBlock g = block.g0;
  for (int t = 0; t < id.n; ++t) g = expand_once(g, block);
  return g;
}

}  // namespace shortness
