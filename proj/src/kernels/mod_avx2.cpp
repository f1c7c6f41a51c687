#include <immintrin.h>

#include "tga/kernels.hpp"

// Residues are below 2^16, so y + c * x < 2^32 is exact in a double.  The
// quotient by p is taken in floating point and corrected by at most one step.

namespace tga::kernels::avx2 {
namespace {

inline __m256d reduce(__m256d v, __m256d vp, __m256d vinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, vinv));
  __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(q, vp));
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ), vp));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
  return r;
}

}  // namespace

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i xi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i yi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256d xlo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(xi));
    const __m256d xhi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(xi, 1));
    const __m256d ylo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(yi));
    const __m256d yhi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(yi, 1));
    const __m256d rlo = reduce(_mm256_add_pd(ylo, _mm256_mul_pd(xlo, vc)), vp, vinv);
    const __m256d rhi = reduce(_mm256_add_pd(yhi, _mm256_mul_pd(xhi, vc)), vp, vinv);
    const __m256i out = _mm256_set_m128i(_mm256_cvttpd_epi32(rhi), _mm256_cvttpd_epi32(rlo));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(c) * x[i]) % p);
  }
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t c, std::uint32_t p) {
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i yi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    const __m256d ylo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(yi));
    const __m256d yhi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(yi, 1));
    const __m256d rlo = reduce(_mm256_mul_pd(ylo, vc), vp, vinv);
    const __m256d rhi = reduce(_mm256_mul_pd(yhi, vc), vp, vinv);
    const __m256i out = _mm256_set_m128i(_mm256_cvttpd_epi32(rhi), _mm256_cvttpd_epi32(rlo));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), out);
  }
  for (; i < n; ++i) {
    y[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) * y[i]) % p);
  }
}

}  // namespace tga::kernels::avx2
