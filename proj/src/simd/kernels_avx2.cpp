#include "torelli/simd/kernels.hpp"

#if defined(TORELLI_HAVE_AVX2_KERNELS)

#include <immintrin.h>

namespace torelli::simd::avx2 {
namespace {

// Exact residue of x (an integer-valued double below 2^53) modulo p.
__attribute__((target("avx2"))) inline __m256d reduce_pd(__m256d x, __m256d pd,
                                                         __m256d pinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, pinv));
  __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, pd));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

}  // namespace

__attribute__((target("avx2"))) void axpy(std::uint32_t* dst, const std::uint32_t* src,
                                          std::uint32_t c, std::size_t n, std::uint32_t p) {
  if (c == 0) return;
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m128i d0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    const __m128i d1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i + 4));
    const __m128i s0 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    const __m128i s1 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i + 4));
    __m256d x0 = _mm256_add_pd(_mm256_cvtepi32_pd(d0), _mm256_mul_pd(cd, _mm256_cvtepi32_pd(s0)));
    __m256d x1 = _mm256_add_pd(_mm256_cvtepi32_pd(d1), _mm256_mul_pd(cd, _mm256_cvtepi32_pd(s1)));
    x0 = reduce_pd(x0, pd, pinv);
    x1 = reduce_pd(x1, pd, pinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(x0));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i + 4), _mm256_cvttpd_epi32(x1));
  }
  if (i < n) scalar::axpy(dst + i, src + i, c, n - i, p);
}

__attribute__((target("avx2"))) void scale(std::uint32_t* dst, std::uint32_t c, std::size_t n,
                                           std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    const __m256d x = reduce_pd(_mm256_mul_pd(cd, _mm256_cvtepi32_pd(d)), pd, pinv);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvttpd_epi32(x));
  }
  if (i < n) scalar::scale(dst + i, c, n - i, p);
}

__attribute__((target("avx2"))) std::uint32_t dot(const std::uint32_t* a,
                                                  const std::uint32_t* b, std::size_t n,
                                                  std::uint32_t p) {
  // Products stay below 2^52, so each 64-bit lane absorbs 2048 of them safely.
  constexpr std::size_t kBlock = 2048;
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i + 8 <= n) {
    __m256i even = _mm256_setzero_si256();
    __m256i odd = _mm256_setzero_si256();
    const std::size_t stop = (n - i) / 8 > kBlock ? i + 8 * kBlock : n - (n - i) % 8;
    for (; i < stop; i += 8) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
      even = _mm256_add_epi64(even, _mm256_mul_epu32(va, vb));
      odd = _mm256_add_epi64(odd, _mm256_mul_epu32(_mm256_srli_epi64(va, 32),
                                                   _mm256_srli_epi64(vb, 32)));
    }
    alignas(32) std::uint64_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), even);
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), odd);
    for (std::uint64_t lane : lanes) total = (total + lane % p) % p;
  }
  if (i < n) total = (total + scalar::dot(a + i, b + i, n - i, p)) % p;
  return static_cast<std::uint32_t>(total);
}

}  // namespace torelli::simd::avx2

#endif
