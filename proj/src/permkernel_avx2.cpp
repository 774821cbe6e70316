#include "hgs/permkernel.hpp"

#include <immintrin.h>

// 64-entry byte table lookup with AVX2.  vpshufb only shuffles within
// 128-bit lanes, so the table is broadcast in 16-byte chunks and the four
// partial lookups are merged by the high bits of the indices.

namespace hgs::kernel {

namespace {

inline __m256i lookup64(__m256i chunk0, __m256i chunk1, __m256i chunk2,
                        __m256i chunk3, __m256i idx) {
  const __m256i low = _mm256_and_si256(idx, _mm256_set1_epi8(0x0f));
  const __m256i hi = _mm256_and_si256(idx, _mm256_set1_epi8(0x30));

  const __m256i r0 = _mm256_shuffle_epi8(chunk0, low);
  const __m256i r1 = _mm256_shuffle_epi8(chunk1, low);
  const __m256i r2 = _mm256_shuffle_epi8(chunk2, low);
  const __m256i r3 = _mm256_shuffle_epi8(chunk3, low);

  const __m256i is1 = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(0x10));
  const __m256i is2 = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(0x20));
  const __m256i is3 = _mm256_cmpeq_epi8(hi, _mm256_set1_epi8(0x30));

  __m256i out = _mm256_blendv_epi8(r0, r1, is1);
  out = _mm256_blendv_epi8(out, r2, is2);
  out = _mm256_blendv_epi8(out, r3, is3);
  return out;
}

inline __m256i broadcast16(const std::uint8_t* p) {
  const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
  return _mm256_broadcastsi128_si256(v);
}

}  // namespace

void compose64_avx2(const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* dst) {
  const __m256i c0 = broadcast16(a);
  const __m256i c1 = broadcast16(a + 16);
  const __m256i c2 = broadcast16(a + 32);
  const __m256i c3 = broadcast16(a + 48);

  const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i b1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 32));

  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst),
                      lookup64(c0, c1, c2, c3, b0));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 32),
                      lookup64(c0, c1, c2, c3, b1));
}

}  // namespace hgs::kernel
