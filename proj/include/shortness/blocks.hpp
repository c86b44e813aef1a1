#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "shortness/graph.hpp"

namespace shortness {

enum class Role { White, Grey, Black, Blue, HubC, HubCPrime, OuterO, ApexX, Plain };

std::string_view role_name(Role r) noexcept;
Role parse_role(std::string_view name);

/// Induced copy of T inside a host triangulation.
/// grey[i] is adjacent to the two outer vertices other than outer[i];
/// white[i] has neighborhood {outer[j], outer[k], grey[i]}.
/// (outer[0], outer[1], outer[2]) is oriented like the slot face the copy fills,
/// so (outer[0], outer[1], white[2]) is a face.
struct TRegion {
  std::array<Vertex, 3> outer{};
  std::array<Vertex, 3> grey{};
  std::array<Vertex, 3> white{};

  std::array<Vertex, 6> inner() const noexcept { return {grey[0], grey[1], grey[2], white[0], white[1], white[2]}; }
  bool contains_inner(Vertex v) const noexcept;
  /// Index i of outer[i], or -1.
  int outer_index(Vertex v) const noexcept;
  /// The grey adjacent to both given outer vertices.
  Vertex common_inner_neighbor(Vertex a, Vertex b) const;
  friend bool operator==(const TRegion&, const TRegion&) = default;
};

/// A white vertex of degree 3 and its neighbors in rotation order.
struct K4Region {
  Vertex white = -1;
  std::array<Vertex, 3> outer{};
  friend bool operator==(const K4Region&, const K4Region&) = default;
};

struct LabeledBlock {
  Triangulation graph;
  std::vector<Role> color;
  std::vector<TRegion> regions;
  std::vector<K4Region> k4regions;

  int order() const noexcept { return graph.order(); }
  std::vector<Vertex> vertices_with(Role r) const;
  std::vector<Vertex> whites() const { return vertices_with(Role::White); }
  std::vector<std::string> color_names() const;
  Vertex vertex(std::string_view label) const;
};

/// Faces that fill the slot face (a, b, c) (darts a->b, b->c, c->a) with a copy
/// of T whose outer vertices are o1 = a, o2 = b, o3 = c. `fresh` holds the ids
/// of g1, g2, g3, w1, w2, w3.
std::vector<Face> t_faces(Face slot, const std::array<Vertex, 6>& fresh);

LabeledBlock build_T();
LabeledBlock build_F10();
LabeledBlock build_F20();
/// r T-regions around a common hub; F10 is build_fan(10).
LabeledBlock build_fan(int r);
LabeledBlock add_apex(const LabeledBlock& b);

std::vector<TRegion> find_T_regions(const Triangulation& g);
std::vector<TRegion> find_T_regions(const LabeledBlock& b);
std::vector<K4Region> find_K4_regions(const LabeledBlock& b);
std::vector<K4Region> find_K4_regions(const Triangulation& g, const std::vector<Role>& color);

/// Rebuilds the derived region lists from graph and colors.
void refresh_regions(LabeledBlock& b);

}  // namespace shortness
