#include "shortness/blocks.hpp"

#include <algorithm>
#include <set>

#include "shortness/errors.hpp"

namespace shortness {

std::string_view role_name(Role r) noexcept {
  switch (r) {
    case Role::White: return "white";
    case Role::Grey: return "grey";
    case Role::Black: return "black";
    case Role::Blue: return "blue";
    case Role::HubC: return "hub_c";
    case Role::HubCPrime: return "hub_cprime";
    case Role::OuterO: return "outer_o";
    case Role::ApexX: return "apex_x";
    case Role::Plain: return "plain";
  }
  return "plain";
}

Role parse_role(std::string_view name) {
  for (Role r : {Role::White, Role::Grey, Role::Black, Role::Blue, Role::HubC, Role::HubCPrime, Role::OuterO,
                 Role::ApexX, Role::Plain})
    if (role_name(r) == name) return r;
  throw Error(ErrorKind::InvalidInput, "unknown role '" + std::string(name) + "'");
}

bool TRegion::contains_inner(Vertex v) const noexcept {
  for (Vertex x : inner())
    if (x == v) return true;
  return false;
}

int TRegion::outer_index(Vertex v) const noexcept {
  for (int i = 0; i < 3; ++i)
    if (outer[static_cast<std::size_t>(i)] == v) return i;
  return -1;
}

Vertex TRegion::common_inner_neighbor(Vertex a, Vertex b) const {
  const int i = outer_index(a), j = outer_index(b);
  if (i < 0 || j < 0 || i == j) throw Error(ErrorKind::InvalidInput, "common_inner_neighbor needs two distinct outer vertices");
  return grey[static_cast<std::size_t>(3 - i - j)];
}

std::vector<Vertex> LabeledBlock::vertices_with(Role r) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (color[static_cast<std::size_t>(v)] == r) out.push_back(v);
  return out;
}

std::vector<std::string> LabeledBlock::color_names() const {
  std::vector<std::string> out;
  out.reserve(color.size());
  for (Role r : color) out.emplace_back(role_name(r));
  return out;
}

Vertex LabeledBlock::vertex(std::string_view label) const {
  auto v = graph.graph().find_label(label);
  if (!v) throw Error(ErrorKind::InvalidInput, "no vertex labeled '" + std::string(label) + "'");
  return *v;
}

std::vector<Face> t_faces(Face slot, const std::array<Vertex, 6>& fresh) {
  const auto [o1, o2, o3] = slot;
  const auto [g1, g2, g3, w1, w2, w3] = fresh;
  return {
      {o1, o2, w3}, {o2, g3, w3}, {g3, o1, w3},  //
      {o2, o3, w1}, {o3, g1, w1}, {g1, o2, w1},  //
      {o3, o1, w2}, {o1, g2, w2}, {g2, o3, w2},  //
      {g3, o2, g1}, {g1, o3, g2}, {g2, o1, g3},  //
      {g3, g1, g2},
  };
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ReconstructionInvalid, what);
}

// Edges of T on local ids o1..o3 = 0..2, g1..g3 = 3..5, w1..w3 = 6..8.
const std::vector<Edge>& t_reference_edges() {
  static const std::vector<Edge> edges = [] {
    std::set<Edge> s;
    for (const Face& f : t_faces({0, 1, 2}, {3, 4, 5, 6, 7, 8}))
      for (int i = 0; i < 3; ++i) {
        Vertex a = f[static_cast<std::size_t>(i)], b = f[static_cast<std::size_t>((i + 1) % 3)];
        s.emplace(std::min(a, b), std::max(a, b));
      }
    return std::vector<Edge>(s.begin(), s.end());
  }();
  return edges;
}

struct Assembler {
  int n = 0;
  std::vector<Face> faces;
  std::vector<std::string> labels;
  std::vector<Role> color;

  Vertex add(std::string label, Role r) {
    labels.push_back(std::move(label));
    color.push_back(r);
    return n++;
  }

  std::array<Vertex, 6> add_t_inner(const std::string& prefix) {
    std::array<Vertex, 6> ids{};
    static constexpr const char* names[6] = {"g1", "g2", "g3", "w1", "w2", "w3"};
    for (int i = 0; i < 6; ++i) ids[static_cast<std::size_t>(i)] = add(prefix + names[i], i < 3 ? Role::Grey : Role::White);
    return ids;
  }

  void fill_with_t(Face slot, const std::string& prefix) {
    auto fs = t_faces(slot, add_t_inner(prefix));
    faces.insert(faces.end(), fs.begin(), fs.end());
  }

  LabeledBlock finish(Face outer) {
    LabeledBlock b;
    b.graph = Triangulation::from_faces(n, faces, outer, labels);
    b.color = color;
    refresh_regions(b);
    return b;
  }
};

void check_common(const LabeledBlock& b, const std::string& name) {
  require(is_maximal_planar(b.graph), name + " is not maximal planar");
  require(simplicial_vertices(b.graph.graph()) == b.whites(), name + ": white vertices differ from simplicial vertices");
  const auto w = b.whites();
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      require(!b.graph.graph().adjacent(w[i], w[j]), name + ": white vertices are adjacent");
}

}  // namespace

LabeledBlock build_T() {
  Assembler a;
  const Vertex o1 = a.add("o1", Role::OuterO), o2 = a.add("o2", Role::OuterO), o3 = a.add("o3", Role::OuterO);
  a.fill_with_t({o1, o2, o3}, "");
  a.faces.push_back({o1, o3, o2});
  LabeledBlock b = a.finish({o1, o3, o2});

  check_common(b, "T");
  const Graph& g = b.graph.graph();
  std::vector<int> deg;
  for (Vertex v = 0; v < g.order(); ++v) deg.push_back(g.degree(v));
  require(deg == std::vector<int>({6, 6, 6, 5, 5, 5, 3, 3, 3}), "T degree sequence");
  for (Vertex w : b.whites()) {
    int inner = 0;
    for (Vertex u : g.neighbors(w)) inner += b.color[static_cast<std::size_t>(u)] != Role::OuterO;
    require(inner == 1, "T white with more than one non-outer neighbor");
  }
  for (Vertex x : {o1, o2, o3})
    for (Vertex y : {o1, o2, o3})
      if (x < y) require(is_dominating(g, std::array<Vertex, 2>{x, y}), "T outer pair not dominating");
  require(b.regions.size() == 1, "T must be one T-region");
  return b;
}

LabeledBlock build_fan(int r) {
  if (r < 2) throw Error(ErrorKind::InvalidInput, "fan needs r >= 2");
  Assembler a;
  const int m = 2 * r;
  const Vertex c = a.add("c", Role::HubC);
  std::vector<Vertex> b(static_cast<std::size_t>(m)), u(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = a.add("b" + std::to_string(i + 1), Role::Black);
  for (int i = 0; i < m; ++i) u[static_cast<std::size_t>(i)] = a.add("u" + std::to_string(i + 1), Role::Blue);
  const Vertex cp = a.add("c'", Role::HubCPrime);
  for (int i = 0; i < m; ++i) {
    const auto k = static_cast<std::size_t>(i), k1 = static_cast<std::size_t>((i + 1) % m);
    if (i % 2 == 0)
      a.fill_with_t({c, b[k], b[k1]}, "r" + std::to_string(i / 2 + 1) + ".");
    else
      a.faces.push_back({c, b[k], b[k1]});
    a.faces.push_back({b[k1], b[k], u[k]});
    a.faces.push_back({b[k1], u[k], u[k1]});
    a.faces.push_back({u[k1], u[k], cp});
  }
  LabeledBlock blk = a.finish({u[1], u[0], cp});

  const std::string name = "fan(" + std::to_string(r) + ")";
  check_common(blk, name);
  require(blk.order() == 10 * r + 2, name + " vertex count");
  require(static_cast<int>(blk.whites().size()) == 3 * r, name + " white count");
  require(static_cast<int>(blk.regions.size()) == r, name + " T-region count");
  const Graph& g = blk.graph.graph();
  for (std::size_t i = 0; i < blk.regions.size(); ++i)
    for (std::size_t j = i + 1; j < blk.regions.size(); ++j) {
      std::vector<Vertex> shared;
      for (Vertex x : blk.regions[i].outer)
        if (blk.regions[j].outer_index(x) >= 0) shared.push_back(x);
      require(shared == std::vector<Vertex>{c}, name + ": T-regions must share exactly the hub");
    }
  for (Vertex x : u) {
    bool black_nb = false;
    for (Vertex y : g.neighbors(x)) {
      const Role ry = blk.color[static_cast<std::size_t>(y)];
      black_nb |= ry == Role::Black;
      require(ry != Role::Grey && ry != Role::White, name + ": blue vertex adjacent to a T-region inner vertex");
    }
    require(black_nb, name + ": blue vertex without black neighbor");
    require(g.adjacent(x, cp), name + ": c' not adjacent to every blue vertex");
  }
  std::vector<Vertex> ring = b;
  ring.insert(ring.end(), u.begin(), u.end());
  std::sort(ring.begin(), ring.end());
  require(max_independent_set_size(g.induced(ring)) == (4 * r) / 3, name + ": independence number of black/blue ring");
  return blk;
}

LabeledBlock build_F10() {
  LabeledBlock b = build_fan(10);
  require(b.order() == 102, "F10 must have 102 vertices");
  require(b.whites().size() == 30, "F10 must have 30 white vertices");
  std::vector<Vertex> ring = b.vertices_with(Role::Black);
  for (Vertex v : b.vertices_with(Role::Blue)) ring.push_back(v);
  std::sort(ring.begin(), ring.end());
  require(max_independent_set_size(b.graph.graph().induced(ring)) == 13, "F10 black/blue independence number must be 13");
  return b;
}

LabeledBlock build_F20() {
  Assembler a;
  const Vertex b1 = a.add("b1", Role::Black), b2 = a.add("b2", Role::Black), b3 = a.add("b3", Role::Black);
  a.fill_with_t({b1, b2, b3}, "r1.");
  a.fill_with_t({b1, b3, b2}, "r2.");
  auto id = [&](const std::string& l) {
    return static_cast<Vertex>(std::find(a.labels.begin(), a.labels.end(), l) - a.labels.begin());
  };
  LabeledBlock b = a.finish({id("r2.g3"), id("r2.g1"), id("r2.g2")});

  check_common(b, "F20");
  require(b.order() == 15, "F20 must have 15 vertices");
  require(b.whites().size() == 6, "F20 must have 6 white vertices");
  require(b.regions.size() == 2, "F20 must contain two T-regions");
  for (Vertex x : {b1, b2, b3})
    for (Vertex y : {b1, b2, b3})
      if (x < y) require(is_dominating(b.graph.graph(), std::array<Vertex, 2>{x, y}), "F20 black pair not dominating");
  return b;
}

LabeledBlock add_apex(const LabeledBlock& b) {
  const Face outer = b.graph.outer_face();
  const Face canon = canonical_face(outer);
  std::vector<Face> faces;
  for (const Face& f : b.graph.triangles())
    if (canonical_face(f) != canon) faces.push_back(f);
  const int n = b.order();
  const Vertex x = n;
  const auto [p, q, r] = outer;
  faces.push_back({p, q, x});
  faces.push_back({q, r, x});
  faces.push_back({r, p, x});
  std::vector<std::string> labels = b.graph.graph().labels();
  std::string xl = "x";
  while (b.graph.graph().find_label(xl)) xl += "'";
  labels.push_back(xl);
  LabeledBlock out;
  out.graph = Triangulation::from_faces(n + 1, faces, {p, q, x}, std::move(labels));
  out.color = b.color;
  out.color.push_back(Role::ApexX);
  refresh_regions(out);
  return out;
}

namespace {

struct RoleMatch {
  bool ok = false;
  TRegion region;
};

RoleMatch match_roles(const Triangulation& tri, std::array<Vertex, 3> o, const std::vector<Vertex>& inner) {
  const Graph& g = tri.graph();
  RoleMatch m;
  m.region.outer = o;
  for (int i = 0; i < 3; ++i) {
    const Vertex oi = o[static_cast<std::size_t>(i)], oj = o[static_cast<std::size_t>((i + 1) % 3)],
                 ok = o[static_cast<std::size_t>((i + 2) % 3)];
    Vertex grey = -1;
    for (Vertex v : inner)
      if (g.degree(v) == 5 && g.adjacent(v, oj) && g.adjacent(v, ok) && !g.adjacent(v, oi)) {
        if (grey >= 0) return m;
        grey = v;
      }
    if (grey < 0) return m;
    Vertex white = -1;
    for (Vertex v : inner)
      if (g.degree(v) == 3 && g.adjacent(v, oj) && g.adjacent(v, ok) && g.adjacent(v, grey)) {
        if (white >= 0) return m;
        white = v;
      }
    if (white < 0) return m;
    m.region.grey[static_cast<std::size_t>(i)] = grey;
    m.region.white[static_cast<std::size_t>(i)] = white;
  }
  std::array<Vertex, 9> local{o[0], o[1], o[2]};
  for (int i = 0; i < 3; ++i) {
    local[static_cast<std::size_t>(3 + i)] = m.region.grey[static_cast<std::size_t>(i)];
    local[static_cast<std::size_t>(6 + i)] = m.region.white[static_cast<std::size_t>(i)];
  }
  std::set<Vertex> distinct(local.begin(), local.end());
  if (distinct.size() != 9) return m;
  int induced = 0;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = i + 1; j < 9; ++j) induced += g.adjacent(local[i], local[j]);
  if (induced != 21) return m;
  for (auto [a, b] : t_reference_edges())
    if (!g.adjacent(local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)])) return m;
  // orientation: (o1, o2, w3) must be a face
  if (tri.successor(o[1], o[0]) != m.region.white[2]) return m;
  m.ok = true;
  return m;
}

}  // namespace

std::vector<TRegion> find_T_regions(const Triangulation& tri) {
  const Graph& g = tri.graph();
  const int n = g.order();
  std::vector<TRegion> out;
  std::vector<int> stamp(static_cast<std::size_t>(n), -1);
  int next_stamp = 0;
  std::vector<Vertex> queue;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : g.neighbors(a)) {
      if (b <= a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= b || !g.adjacent(a, c)) continue;
        const int base = next_stamp;
        stamp[static_cast<std::size_t>(a)] = stamp[static_cast<std::size_t>(b)] = stamp[static_cast<std::size_t>(c)] = base;
        ++next_stamp;
        for (Vertex s : {a, b, c})
          for (Vertex start : g.neighbors(s)) {
            if (stamp[static_cast<std::size_t>(start)] >= base) continue;
            // bounded search: components larger than 6 are abandoned early
            const int mine = next_stamp++;
            queue.assign(1, start);
            stamp[static_cast<std::size_t>(start)] = mine;
            bool big = false;
            for (std::size_t qi = 0; qi < queue.size() && !big; ++qi)
              for (Vertex y : g.neighbors(queue[qi])) {
                const int sy = stamp[static_cast<std::size_t>(y)];
                if (sy == base) continue;
                if (sy > base && sy != mine) {
                  big = true;
                  break;
                }
                if (sy == mine) continue;
                stamp[static_cast<std::size_t>(y)] = mine;
                queue.push_back(y);
                if (queue.size() > 6) {
                  big = true;
                  break;
                }
              }
            if (big || queue.size() != 6) continue;
            std::sort(queue.begin(), queue.end());
            for (auto order : {std::array<Vertex, 3>{a, b, c}, std::array<Vertex, 3>{a, c, b}}) {
              RoleMatch m = match_roles(tri, order, queue);
              if (m.ok) {
                out.push_back(m.region);
                break;
              }
            }
          }
      }
    }
  return out;
}

std::vector<TRegion> find_T_regions(const LabeledBlock& b) { return find_T_regions(b.graph); }

std::vector<K4Region> find_K4_regions(const Triangulation& tri, const std::vector<Role>& color) {
  const Graph& g = tri.graph();
  std::vector<K4Region> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (color[static_cast<std::size_t>(v)] != Role::White || g.degree(v) != 3) continue;
    auto rot = tri.rotation(v);
    if (!g.adjacent(rot[0], rot[1]) || !g.adjacent(rot[1], rot[2]) || !g.adjacent(rot[0], rot[2])) continue;
    out.push_back({v, {rot[0], rot[1], rot[2]}});
  }
  return out;
}

std::vector<K4Region> find_K4_regions(const LabeledBlock& b) { return find_K4_regions(b.graph, b.color); }

void refresh_regions(LabeledBlock& b) {
  b.regions = find_T_regions(b.graph);
  b.k4regions = find_K4_regions(b);
}

}  // namespace shortness
