// Compiled with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include "nbihom/simd/fp_kernels.hpp"

namespace nbihom::simd::detail {

namespace {

// Products of two residues below 2^21 are exact in a double, so a*x mod p can
// be formed as a*x - floor(a*x/p)*p with one correction step either way.
constexpr std::uint32_t kMaxDoubleModulus = 1U << 21;

inline __m256d mulmod_pd(__m256d a, __m256d x, __m256d p, __m256d invp) {
  __m256d prod = _mm256_mul_pd(a, x);
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(prod, invp));
  __m256d r = _mm256_sub_pd(prod, _mm256_mul_pd(q, p));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

}  // namespace

void submul_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::uint32_t p, std::size_t n) {
  if (a == 0) return;
  if (p >= kMaxDoubleModulus) {
    submul_scalar(y, x, a, p, n);
    return;
  }
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinvp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d va = _mm256_set1_pd(static_cast<double>(a));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i xi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(x + i));
    __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
    __m256d r = mulmod_pd(va, _mm256_cvtepi32_pd(xi), vp, vinvp);
    __m256d t = _mm256_sub_pd(_mm256_cvtepi32_pd(yi), r);
    t = _mm256_add_pd(t, _mm256_and_pd(_mm256_cmp_pd(t, zero, _CMP_LT_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(t));
  }
  submul_scalar(y + i, x + i, a, p, n - i);
}

void scale_avx2(std::uint32_t* y, std::uint32_t a, std::uint32_t p, std::size_t n) {
  if (p >= kMaxDoubleModulus) {
    scale_scalar(y, a, p, n);
    return;
  }
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinvp = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d va = _mm256_set1_pd(static_cast<double>(a));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i yi = _mm_loadu_si128(reinterpret_cast<const __m128i*>(y + i));
    __m256d r = mulmod_pd(va, _mm256_cvtepi32_pd(yi), vp, vinvp);
    _mm_storeu_si128(reinterpret_cast<__m128i*>(y + i), _mm256_cvttpd_epi32(r));
  }
  scale_scalar(y + i, a, p, n - i);
}

}  // namespace nbihom::simd::detail
