#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace shortness {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;
/// Oriented triangle: darts a->b, b->c, c->a.
using Face = std::array<Vertex, 3>;

/// Simple undirected graph with dense vertex ids and per-vertex labels.
/// Immutable once built; neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency,
                              std::vector<std::string> labels = {});
  static Graph from_edges(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  const std::string& label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Vertex> find_label(std::string_view label) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`; vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;
  Graph without_vertex(Vertex v) const;
  /// Relabeled copy: vertex v becomes perm[v].
  Graph permuted(std::span<const Vertex> perm) const;
  bool is_complete() const noexcept;
  bool is_connected() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Vertex> label_index_;
  std::size_t edge_count_ = 0;
};

/// Vertex set used as a separator candidate. Members are sorted and unique.
struct VertexCut {
  std::vector<Vertex> members;

  VertexCut() = default;
  explicit VertexCut(std::vector<Vertex> vs);
  std::size_t size() const noexcept { return members.size(); }
  bool contains(Vertex v) const;
};

struct ComponentPartition {
  int count = 0;
  /// Components ordered by their smallest vertex; each part sorted.
  std::vector<std::vector<Vertex>> parts;
};

/// Connected components of G - S. Throws CutIsWholeGraph when S = V(G).
ComponentPartition components_after_cut(const Graph& g, const VertexCut& cut);

/// True iff every vertex outside D has a neighbor in D.
bool is_dominating(const Graph& g, std::span<const Vertex> dominators);

/// Vertices whose neighborhood induces a complete graph.
std::vector<Vertex> simplicial_vertices(const Graph& g);

/// Exact maximum independent set size (branch and bound; intended for
/// graphs of a few dozen vertices).
int max_independent_set_size(const Graph& g);

/// Embedded graph: a Graph plus a rotation system (cyclic neighbor order per
/// vertex) and a distinguished oriented face. The constructors check only
/// that the rotation system is well formed; maximal planarity is a separate
/// predicate.
class Triangulation {
 public:
  Triangulation() = default;

  /// Builds the rotation system from consistently oriented triangles: for face
  /// (a, b, c) the successor of a around b is c.
  static Triangulation from_faces(int n, std::span<const Face> faces, Face outer,
                                  std::vector<std::string> labels = {});
  static Triangulation from_rotation(std::vector<std::vector<Vertex>> rotation, Face outer,
                                     std::vector<std::string> labels = {});

  const Graph& graph() const noexcept { return graph_; }
  int order() const noexcept { return graph_.order(); }
  std::span<const Vertex> rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotation_; }
  const Face& outer_face() const noexcept { return outer_; }
  const std::string& label(Vertex v) const { return graph_.label(v); }

  /// Neighbor following u in the rotation of v.
  Vertex successor(Vertex v, Vertex u) const;

  /// Oriented faces of the embedding. For triangulations each entry has 3
  /// vertices. Throws EmbeddingInconsistent when the walk does not close or
  /// Euler's formula fails.
  std::vector<std::vector<Vertex>> faces() const;
  /// Same as faces() but requires every face to be a triangle.
  std::vector<Face> triangles() const;

  bool operator==(const Triangulation& other) const;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
  // rotation_pos_[v][k] = index in rotation_[v] of the k-th sorted neighbor.
  std::vector<std::vector<std::int32_t>> rotation_pos_;
  Face outer_{};

  void index_rotation();
};

std::vector<std::vector<Vertex>> traverse_faces(const Triangulation& g);
bool is_maximal_planar(const Triangulation& g);

/// Rotates a face so that its smallest vertex comes first (orientation kept).
Face canonical_face(const Face& f) noexcept;

}  // namespace shortness
