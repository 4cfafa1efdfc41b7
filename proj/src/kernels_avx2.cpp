#include <immintrin.h>

#include <climits>

#include "soergel/kernels.hpp"

namespace soergel::kernels::avx2 {

namespace {

// Lanes whose sign bit ends up set had a signed overflow.
inline __m256i add_overflow_mask(__m256i a, __m256i b, __m256i r) {
  return _mm256_andnot_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r));
}

inline __m256i sub_overflow_mask(__m256i a, __m256i b, __m256i r) {
  return _mm256_and_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r));
}

}  // namespace

bool add_into(std::int64_t* dst, const std::int64_t* src, std::size_t n) {
  __m256i flags = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i r = _mm256_add_epi64(a, b);
    flags = _mm256_or_si256(flags, add_overflow_mask(a, b, r));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  bool overflow = _mm256_movemask_pd(_mm256_castsi256_pd(flags)) != 0;
  if (i < n) overflow |= scalar::add_into(dst + i, src + i, n - i);
  return overflow;
}

bool sub_scaled_into(std::int64_t* dst, const std::int64_t* src, std::int64_t c, std::size_t n) {
  // _mm256_mul_epi32 multiplies the low signed 32 bits of each lane, which is
  // exact when both factors fit in int32. Blocks that do not are done in
  // scalar code.
  if (c > INT32_MAX || c < INT32_MIN) return scalar::sub_scaled_into(dst, src, c, n);
  const __m256i vc = _mm256_set1_epi64x(c);
  const __m256i hi = _mm256_set1_epi64x(INT32_MAX);
  const __m256i lo = _mm256_set1_epi64x(INT32_MIN);
  __m256i flags = _mm256_setzero_si256();
  bool overflow = false;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i out_of_range = _mm256_or_si256(_mm256_cmpgt_epi64(b, hi), _mm256_cmpgt_epi64(lo, b));
    if (!_mm256_testz_si256(out_of_range, out_of_range)) {
      overflow |= scalar::sub_scaled_into(dst + i, src + i, c, 4);
      continue;
    }
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i p = _mm256_mul_epi32(b, vc);
    const __m256i r = _mm256_sub_epi64(a, p);
    flags = _mm256_or_si256(flags, sub_overflow_mask(a, p, r));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  overflow |= _mm256_movemask_pd(_mm256_castsi256_pd(flags)) != 0;
  if (i < n) overflow |= scalar::sub_scaled_into(dst + i, src + i, c, n - i);
  return overflow;
}

}  // namespace soergel::kernels::avx2
