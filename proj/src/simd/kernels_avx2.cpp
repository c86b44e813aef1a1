#if defined(SHORTNESS_AVX2)
#include <immintrin.h>
#endif

#include "shortness/simd.hpp"

namespace shortness::simd::avx2 {

#if defined(SHORTNESS_AVX2)

namespace {

inline __m256i load(const VertexSet& s) { return _mm256_load_si256(reinterpret_cast<const __m256i*>(s.w.data())); }
inline void store(VertexSet& s, __m256i x) { _mm256_store_si256(reinterpret_cast<__m256i*>(s.w.data()), x); }
inline bool is_zero(__m256i x) { return _mm256_testz_si256(x, x) != 0; }

inline __m256i gather_rows(const BitGraph& g, const VertexSet& s) {
  __m256i acc = _mm256_setzero_si256();
  for (int i = 0; i < 4; ++i) {
    for (std::uint64_t m = s.w[static_cast<std::size_t>(i)]; m; m &= m - 1) {
      const int v = i * 64 + __builtin_ctzll(m);
      acc = _mm256_or_si256(acc, load(g.rows[static_cast<std::size_t>(v)]));
    }
  }
  return acc;
}

__m256i closure_reg(const BitGraph& g, __m256i seed, __m256i allowed) {
  __m256i reach = _mm256_and_si256(seed, allowed);
  __m256i frontier = reach;
  VertexSet f;
  while (!is_zero(frontier)) {
    store(f, frontier);
    __m256i next = _mm256_and_si256(gather_rows(g, f), allowed);
    next = _mm256_andnot_si256(reach, next);
    reach = _mm256_or_si256(reach, next);
    frontier = next;
  }
  return reach;
}

int count_reg(const BitGraph& g, __m256i left) {
  int c = 0;
  VertexSet tmp;
  while (!is_zero(left)) {
    store(tmp, left);
    VertexSet s;
    s.set(tmp.first());
    left = _mm256_andnot_si256(closure_reg(g, load(s), left), left);
    ++c;
  }
  return c;
}

}  // namespace

VertexSet neighborhood(const BitGraph& g, const VertexSet& s) {
  VertexSet out;
  store(out, gather_rows(g, s));
  return out;
}

VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed) {
  VertexSet out;
  store(out, closure_reg(g, load(seed), load(allowed)));
  return out;
}

int count_components(const BitGraph& g, const VertexSet& alive) { return count_reg(g, load(alive)); }

int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked) {
  const __m256i a = load(alive);
  const __m256i touched = closure_reg(g, load(marked), a);
  return count_reg(g, _mm256_andnot_si256(touched, a));
}

#else

VertexSet neighborhood(const BitGraph& g, const VertexSet& s) { return generic::neighborhood(g, s); }
VertexSet closure(const BitGraph& g, const VertexSet& seed, const VertexSet& allowed) {
  return generic::closure(g, seed, allowed);
}
int count_components(const BitGraph& g, const VertexSet& alive) { return generic::count_components(g, alive); }
int count_components_avoiding(const BitGraph& g, const VertexSet& alive, const VertexSet& marked) {
  return generic::count_components_avoiding(g, alive, marked);
}

#endif

}  // namespace shortness::simd::avx2
