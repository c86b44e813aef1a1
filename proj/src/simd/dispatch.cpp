#include <atomic>

#include "shortness/errors.hpp"
#include "shortness/simd.hpp"

namespace shortness::simd {

BitGraph BitGraph::from(const Graph& g) {
  if (g.order() > kMaxVertices)
    throw Error(ErrorKind::InvalidInput, "bitset kernels support at most " + std::to_string(kMaxVertices) + " vertices");
  BitGraph b;
  b.n = g.order();
  b.rows.resize(static_cast<std::size_t>(b.n));
  for (Vertex v = 0; v < b.n; ++v)
    for (Vertex u : g.neighbors(v)) b.rows[static_cast<std::size_t>(v)].set(u);
  return b;
}

bool avx2_available() noexcept {
#if defined(SHORTNESS_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Table {
  VertexSet (*closure)(const BitGraph&, const VertexSet&, const VertexSet&);
  VertexSet (*neighborhood)(const BitGraph&, const VertexSet&);
  int (*count)(const BitGraph&, const VertexSet&);
  int (*count_avoiding)(const BitGraph&, const VertexSet&, const VertexSet&);
  KernelIsa isa;
};

constexpr Table kGeneric{generic::closure, generic::neighborhood, generic::count_components,
                         generic::count_components_avoiding, KernelIsa::Generic};
constexpr Table kAvx2{avx2::closure, avx2::neighborhood, avx2::count_components, avx2::count_components_avoiding,
                      KernelIsa::Avx2};

std::atomic<const Table*>& table() {
  static std::atomic<const Table*> t{avx2_available() ? &kAvx2 : &kGeneric};
  return t;
}

}  // namespace

VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed) {
  return table().load(std::memory_order_relaxed)->closure(g, seed, allowed);
}
VertexSet neighborhood(const BitGraph& g, const VertexSet& s) {
  return table().load(std::memory_order_relaxed)->neighborhood(g, s);
}
int count_components(const BitGraph& g, const VertexSet& alive) {
  return table().load(std::memory_order_relaxed)->count(g, alive);
}
int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked) {
  return table().load(std::memory_order_relaxed)->count_avoiding(g, alive, marked);
}

KernelIsa active_isa() noexcept { return table().load()->isa; }

void force_isa(KernelIsa isa) noexcept {
  if (isa == KernelIsa::Avx2 && !avx2_available()) return;
  table().store(isa == KernelIsa::Avx2 ? &kAvx2 : &kGeneric);
}

std::string_view isa_name(KernelIsa isa) noexcept { return isa == KernelIsa::Avx2 ? "avx2" : "generic"; }

}  // namespace shortness::simd
