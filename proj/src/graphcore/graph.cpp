#include "shortness/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <unordered_map>

#include "shortness/errors.hpp"

namespace shortness {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

}  // namespace

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency, std::vector<std::string> labels) {
  Graph g;
  const int n = static_cast<int>(adjacency.size());
  if (labels.empty()) labels = default_labels(n);
  if (static_cast<int>(labels.size()) != n) throw Error(ErrorKind::InvalidInput, "label count does not match vertex count");
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    auto& nb = adjacency[static_cast<std::size_t>(v)];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw Error(ErrorKind::InvalidInput, "parallel edge at vertex " + std::to_string(v));
    for (Vertex u : nb) {
      if (u < 0 || u >= n) throw Error(ErrorKind::InvalidInput, "neighbor id out of range");
      if (u == v) throw Error(ErrorKind::InvalidInput, "self loop at vertex " + std::to_string(v));
    }
    degree_sum += nb.size();
  }
  for (int v = 0; v < n; ++v) {
    for (Vertex u : adjacency[static_cast<std::size_t>(v)]) {
      const auto& back = adjacency[static_cast<std::size_t>(u)];
      if (!std::binary_search(back.begin(), back.end(), v))
        throw Error(ErrorKind::InvalidInput, "asymmetric adjacency between " + std::to_string(v) + " and " + std::to_string(u));
    }
  }
  g.adj_ = std::move(adjacency);
  g.labels_ = std::move(labels);
  g.edge_count_ = degree_sum / 2;
  g.label_index_.reserve(g.labels_.size());
  for (int v = 0; v < n; ++v) {
    if (!g.label_index_.emplace(g.labels_[static_cast<std::size_t>(v)], v).second)
      throw Error(ErrorKind::InvalidInput, "duplicate label '" + g.labels_[static_cast<std::size_t>(v)] + "'");
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return from_adjacency(std::move(adj), std::move(labels));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> adj(keep.size());
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex u : adj_[static_cast<std::size_t>(keep[i])])
      if (index[static_cast<std::size_t>(u)] >= 0) adj[i].push_back(index[static_cast<std::size_t>(u)]);
    labels.push_back(labels_[static_cast<std::size_t>(keep[i])]);
  }
  return from_adjacency(std::move(adj), std::move(labels));
}

Graph Graph::without_vertex(Vertex v) const {
  std::vector<Vertex> keep;
  keep.reserve(adj_.size());
  for (int u = 0; u < order(); ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  const std::size_t n = adj_.size();
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::string> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto pv = static_cast<std::size_t>(perm[v]);
    labels[pv] = labels_[v];
    for (Vertex u : adj_[v]) adj[pv].push_back(perm[static_cast<std::size_t>(u)]);
  }
  return from_adjacency(std::move(adj), std::move(labels));
}

bool Graph::is_complete() const noexcept {
  const std::size_t n = adj_.size();
  return edge_count_ == n * (n - 1) / 2;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  return components_after_cut(*this, VertexCut{}).count == 1;
}

VertexCut::VertexCut(std::vector<Vertex> vs) : members(std::move(vs)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool VertexCut::contains(Vertex v) const { return std::binary_search(members.begin(), members.end(), v); }

ComponentPartition components_after_cut(const Graph& g, const VertexCut& cut) {
  const int n = g.order();
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (Vertex v : cut.members) {
    if (v < 0 || v >= n) throw Error(ErrorKind::InvalidInput, "cut vertex out of range");
    removed[static_cast<std::size_t>(v)] = 1;
  }
  if (static_cast<int>(cut.size()) == n) throw Error(ErrorKind::CutIsWholeGraph, "cut contains every vertex");

  ComponentPartition out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (removed[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> part;
    removed[static_cast<std::size_t>(s)] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex u : g.neighbors(v)) {
        if (!removed[static_cast<std::size_t>(u)]) {
          removed[static_cast<std::size_t>(u)] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(part.begin(), part.end());
    out.parts.push_back(std::move(part));
  }
  out.count = static_cast<int>(out.parts.size());
  return out;
}

bool is_dominating(const Graph& g, std::span<const Vertex> dominators) {
  std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
  for (Vertex d : dominators) {
    covered[static_cast<std::size_t>(d)] = 1;
    for (Vertex u : g.neighbors(d)) covered[static_cast<std::size_t>(u)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    bool clique = true;
    for (std::size_t i = 0; i < nb.size() && clique; ++i)
      for (std::size_t j = i + 1; j < nb.size() && clique; ++j) clique = g.adjacent(nb[i], nb[j]);
    if (clique) out.push_back(v);
  }
  return out;
}

namespace {

struct MisSolver {
  std::vector<std::uint64_t> nbr;
  std::unordered_map<std::uint64_t, int> memo;

  int solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    // min-degree vertex v: some maximum independent set meets N[v]
    int best_v = -1, best_deg = 65;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int d = std::popcount(nbr[static_cast<std::size_t>(v)] & mask);
      if (d < best_deg) {
        best_deg = d;
        best_v = v;
      }
    }
    int best = 0;
    const std::uint64_t closed = (nbr[static_cast<std::size_t>(best_v)] & mask) | (std::uint64_t{1} << best_v);
    if (best_deg <= 1) {
      best = 1 + solve(mask & ~closed);
    } else {
      for (std::uint64_t m = closed; m; m &= m - 1) {
        const int u = std::countr_zero(m);
        const std::uint64_t cu = nbr[static_cast<std::size_t>(u)] | (std::uint64_t{1} << u);
        best = std::max(best, 1 + solve(mask & ~cu));
      }
    }
    memo.emplace(mask, best);
    return best;
  }
};

}  // namespace

int max_independent_set_size(const Graph& g) {
  const int n = g.order();
  if (n > 64) throw Error(ErrorKind::InvalidInput, "max_independent_set_size supports at most 64 vertices");
  MisSolver s;
  s.nbr.assign(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) s.nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return s.solve(all);
}

// ---------------------------------------------------------------------------

Triangulation Triangulation::from_faces(int n, std::span<const Face> faces, Face outer,
                                        std::vector<std::string> labels) {
  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n));
  auto put = [&](Vertex at, Vertex from, Vertex to) {
    if (at < 0 || at >= n || from < 0 || from >= n || to < 0 || to >= n)
      throw Error(ErrorKind::EmbeddingInconsistent, "face vertex out of range");
    if (!succ[static_cast<std::size_t>(at)].emplace(from, to).second)
      throw Error(ErrorKind::EmbeddingInconsistent,
                  "dart " + std::to_string(from) + "->" + std::to_string(at) + " used by two faces");
  };
  for (const Face& f : faces) {
    const auto [a, b, c] = f;
    if (a == b || b == c || a == c) throw Error(ErrorKind::EmbeddingInconsistent, "degenerate face");
    put(b, a, c);
    put(c, b, a);
    put(a, c, b);
  }
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& s = succ[static_cast<std::size_t>(v)];
    if (s.empty()) continue;
    auto& rot = rotation[static_cast<std::size_t>(v)];
    Vertex cur = s.begin()->first;
    do {
      rot.push_back(cur);
      auto it = s.find(cur);
      if (it == s.end() || rot.size() > s.size())
        throw Error(ErrorKind::EmbeddingInconsistent, "rotation at vertex " + std::to_string(v) + " is not a single cycle");
      cur = it->second;
    } while (cur != s.begin()->first);
    if (rot.size() != s.size())
      throw Error(ErrorKind::EmbeddingInconsistent, "rotation at vertex " + std::to_string(v) + " is not a single cycle");
  }
  return from_rotation(std::move(rotation), outer, std::move(labels));
}

Triangulation Triangulation::from_rotation(std::vector<std::vector<Vertex>> rotation, Face outer,
                                           std::vector<std::string> labels) {
  Triangulation t;
  try {
    t.graph_ = Graph::from_adjacency(rotation, std::move(labels));
  } catch (const Error& e) {
    throw Error(ErrorKind::EmbeddingInconsistent, e.what());
  }
  t.rotation_ = std::move(rotation);
  t.outer_ = outer;
  t.index_rotation();
  return t;
}

void Triangulation::index_rotation() {
  rotation_pos_.assign(rotation_.size(), {});
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    auto nb = graph_.neighbors(static_cast<Vertex>(v));
    auto& pos = rotation_pos_[v];
    pos.assign(nb.size(), 0);
    for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
      auto k = std::lower_bound(nb.begin(), nb.end(), rotation_[v][i]) - nb.begin();
      pos[static_cast<std::size_t>(k)] = static_cast<std::int32_t>(i);
    }
  }
}

Vertex Triangulation::successor(Vertex v, Vertex u) const {
  auto nb = graph_.neighbors(v);
  auto it = std::lower_bound(nb.begin(), nb.end(), u);
  if (it == nb.end() || *it != u)
    throw Error(ErrorKind::EmbeddingInconsistent, "successor query on non-edge " + std::to_string(v) + "-" + std::to_string(u));
  const auto& rot = rotation_[static_cast<std::size_t>(v)];
  const auto i = static_cast<std::size_t>(rotation_pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(it - nb.begin())]);
  return rot[(i + 1) % rot.size()];
}

std::vector<std::vector<Vertex>> Triangulation::faces() const {
  const int n = order();
  std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) offset[static_cast<std::size_t>(v) + 1] = offset[static_cast<std::size_t>(v)] + static_cast<std::size_t>(graph_.degree(v));
  auto dart_id = [&](Vertex u, Vertex v) {
    auto nb = graph_.neighbors(u);
    return offset[static_cast<std::size_t>(u)] + static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  const std::size_t darts = offset.back();
  std::vector<char> seen(darts, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : rotation_[static_cast<std::size_t>(u)]) {
      if (seen[dart_id(u, v)]) continue;
      std::vector<Vertex> face;
      Vertex a = u, b = v;
      while (!seen[dart_id(a, b)]) {
        seen[dart_id(a, b)] = 1;
        face.push_back(a);
        if (face.size() > darts) throw Error(ErrorKind::EmbeddingInconsistent, "face walk does not close");
        const Vertex c = successor(b, a);
        a = b;
        b = c;
      }
      if (a != u || b != v) throw Error(ErrorKind::EmbeddingInconsistent, "face walk does not close");
      out.push_back(std::move(face));
    }
  }
  const auto V = static_cast<long long>(n);
  const auto E = static_cast<long long>(graph_.size());
  const auto F = static_cast<long long>(out.size());
  if (n > 0 && graph_.is_connected() && V - E + F != 2)
    throw Error(ErrorKind::EmbeddingInconsistent,
                "Euler count fails: V-E+F = " + std::to_string(V - E + F) + " (not a planar embedding)");
  return out;
}

std::vector<Face> Triangulation::triangles() const {
  std::vector<Face> out;
  for (const auto& f : faces()) {
    if (f.size() != 3) throw Error(ErrorKind::EmbeddingInconsistent, "face of size " + std::to_string(f.size()));
    out.push_back({f[0], f[1], f[2]});
  }
  return out;
}

bool Triangulation::operator==(const Triangulation& other) const {
  return rotation_ == other.rotation_ && outer_ == other.outer_ && graph_.labels() == other.graph_.labels();
}

std::vector<std::vector<Vertex>> traverse_faces(const Triangulation& g) { return g.faces(); }

Face canonical_face(const Face& f) noexcept {
  if (f[1] < f[0] && f[1] < f[2]) return {f[1], f[2], f[0]};
  if (f[2] < f[0] && f[2] < f[1]) return {f[2], f[0], f[1]};
  return f;
}

bool is_maximal_planar(const Triangulation& g) {
  const int n = g.order();
  if (n < 4) return false;
  if (!g.graph().is_connected()) return false;
  const auto faces = g.faces();
  if (static_cast<long long>(g.graph().size()) != 3LL * n - 6) return false;
  if (static_cast<long long>(faces.size()) != 2LL * n - 4) return false;
  const Face outer = canonical_face(g.outer_face());
  bool outer_found = false;
  for (const auto& f : faces) {
    if (f.size() != 3) return false;
    if (canonical_face({f[0], f[1], f[2]}) == outer) outer_found = true;
  }
  return outer_found;
}

}  // namespace shortness
