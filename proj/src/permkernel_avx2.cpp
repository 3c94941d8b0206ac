#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "tensorsq/permkernel.hpp"

namespace tensorsq::pk::avx2 {

void gather_map(u32* dst, const u32* idx, const u32* map, std::size_t n) {
  std::size_t i = 0;
  const int* base = reinterpret_cast<const int*>(map);
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    __m256i g = _mm256_i32gather_epi32(base, v, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), g);
  }
  for (; i < n; ++i) dst[i] = map[idx[i]];
}

bool is_identity(const u32* p, std::size_t n) {
  std::size_t i = 0;
  __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i eight = _mm256_set1_epi32(8);
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    __m256i eq = _mm256_cmpeq_epi32(v, iota);
    if (_mm256_movemask_epi8(eq) != -1) return false;
    iota = _mm256_add_epi32(iota, eight);
  }
  for (; i < n; ++i)
    if (p[i] != i) return false;
  return true;
}

}  // namespace tensorsq::pk::avx2

#endif
