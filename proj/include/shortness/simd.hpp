#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

#include "shortness/graph.hpp"

namespace shortness::simd {

constexpr int kMaxVertices = 256;

/// Fixed-width vertex bitset (256 bits), 32-byte aligned so one row is one
/// AVX2 register.
struct alignas(32) VertexSet {
  std::array<std::uint64_t, 4> w{};

  void set(int v) noexcept { w[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) noexcept { w[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const noexcept { return (w[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U; }
  bool empty() const noexcept { return (w[0] | w[1] | w[2] | w[3]) == 0; }
  int count() const noexcept {
    return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) + std::popcount(w[3]);
  }
  /// Lowest member, or -1.
  int first() const noexcept {
    for (int i = 0; i < 4; ++i)
      if (w[static_cast<std::size_t>(i)]) return i * 64 + std::countr_zero(w[static_cast<std::size_t>(i)]);
    return -1;
  }
  bool intersects(const VertexSet& o) const noexcept {
    return ((w[0] & o.w[0]) | (w[1] & o.w[1]) | (w[2] & o.w[2]) | (w[3] & o.w[3])) != 0;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < 4; ++i) w[i] &= o.w[i];
    return *this;
  }
  VertexSet minus(const VertexSet& o) const noexcept {
    VertexSet r;
    for (std::size_t i = 0; i < 4; ++i) r.w[i] = w[i] & ~o.w[i];
    return r;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < 4; ++i)
      for (std::uint64_t m = w[static_cast<std::size_t>(i)]; m; m &= m - 1) f(i * 64 + std::countr_zero(m));
  }

  static VertexSet range(int n) noexcept {
    VertexSet s;
    for (int v = 0; v < n; ++v) s.set(v);
    return s;
  }
};

/// Adjacency rows as VertexSets. Requires order() <= kMaxVertices.
struct BitGraph {
  int n = 0;
  std::vector<VertexSet> rows;

  static BitGraph from(const Graph& g);
};

enum class KernelIsa { Generic, Avx2 };

/// Vertices reachable from seed inside allowed (seed is intersected with allowed first).
VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed);
/// Union of the neighborhoods of the members of s.
VertexSet neighborhood(const BitGraph& g, const VertexSet& s);
/// Number of connected components of G[alive].
int count_components(const BitGraph& g, const VertexSet& alive);
/// Number of components of G[alive] containing no vertex of marked.
int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked);

KernelIsa active_isa() noexcept;
bool avx2_available() noexcept;
/// Forces a variant (tests). Requesting Avx2 on a machine without it is ignored.
void force_isa(KernelIsa isa) noexcept;
std::string_view isa_name(KernelIsa isa) noexcept;

/// Direct access to each variant for equivalence tests.
namespace generic {
VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed);
VertexSet neighborhood(const BitGraph& g, const VertexSet& s);
int count_components(const BitGraph& g, const VertexSet& alive);
int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked);
}  // namespace generic

namespace avx2 {
VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed);
VertexSet neighborhood(const BitGraph& g, const VertexSet& s);
int count_components(const BitGraph& g, const VertexSet& alive);
int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked);
}  // namespace avx2

}  // namespace shortness::simd
