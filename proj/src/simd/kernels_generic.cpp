#include "shortness/simd.hpp"

namespace shortness::simd::generic {

VertexSet neighborhood(const BitGraph& g, const VertexSet& s) {
  VertexSet acc;
  s.for_each([&](int v) { acc |= g.rows[static_cast<std::size_t>(v)]; });
  return acc;
}

VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed) {
  VertexSet reach = seed & allowed;
  VertexSet frontier = reach;
  while (!frontier.empty()) {
    VertexSet next = generic::neighborhood(g, frontier) & allowed;
    next = next.minus(reach);
    reach |= next;
    frontier = next;
  }
  return reach;
}

int count_components(const BitGraph& g, const VertexSet& alive) {
  VertexSet left = alive;
  int c = 0;
  for (int v = left.first(); v >= 0; v = left.first()) {
    VertexSet s;
    s.set(v);
    left = left.minus(generic::closure(g, s, left));
    ++c;
  }
  return c;
}

int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked) {
  VertexSet left = alive.minus(generic::closure(g, marked, alive));
  return generic::count_components(g, left);
}

}  // namespace shortness::simd::generic
