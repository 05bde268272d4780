// AVX2 variants of the exponent-block kernels. One ExpBlock is 16 uint32
// lanes, i.e. exactly two 256-bit registers. Compiled with -mavx2 in its own
// translation unit; callers must check CPU support first (kernels.cpp does).

#include "epslab/kernels.hpp"

#if defined(EPSLAB_HAVE_AVX2) && defined(__AVX2__)

#include <immintrin.h>

namespace epslab::simd {

namespace {

// a[i] <= b[i] for all lanes of one 256-bit half: min(a,b) == a.
inline bool half_divides(__m256i a, __m256i b) noexcept {
  const __m256i mn = _mm256_min_epu32(a, b);
  const __m256i eq = _mm256_cmpeq_epi32(mn, a);
  return _mm256_movemask_ps(_mm256_castsi256_ps(eq)) == 0xff;
}

bool avx2_divides(const std::uint32_t* a, const std::uint32_t* b) noexcept {
  const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  if (!half_divides(a0, b0)) return false;
  const __m256i a1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 8));
  const __m256i b1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 8));
  return half_divides(a1, b1);
}

void avx2_lcm(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* out) noexcept {
  const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i a1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 8));
  const __m256i b1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 8));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out),
                      _mm256_max_epu32(a0, b0));
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + 8),
                      _mm256_max_epu32(a1, b1));
}

// max(a - b, 0) as a - min(a, b); exact for unsigned lanes.
void avx2_quotient(const std::uint32_t* a, const std::uint32_t* b,
                   std::uint32_t* out) noexcept {
  const __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
  const __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
  const __m256i a1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 8));
  const __m256i b1 =
      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 8));
  _mm256_storeu_si256(
      reinterpret_cast<__m256i*>(out),
      _mm256_sub_epi32(a0, _mm256_min_epu32(a0, b0)));
  _mm256_storeu_si256(
      reinterpret_cast<__m256i*>(out + 8),
      _mm256_sub_epi32(a1, _mm256_min_epu32(a1, b1)));
}

void avx2_member_mask(const std::uint32_t* rows, std::size_t row_count,
                      const std::uint32_t* gens, std::size_t gen_count,
                      std::uint8_t* mask) noexcept {
  for (std::size_t r = 0; r < row_count; ++r) {
    const std::uint32_t* row = rows + r * kBlockLanes;
    const __m256i r0 =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row));
    const __m256i r1 =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + 8));
    std::uint8_t hit = 0;
    for (std::size_t g = 0; g < gen_count; ++g) {
      const std::uint32_t* gen = gens + g * kBlockLanes;
      const __m256i g0 =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gen));
      if (!half_divides(g0, r0)) continue;
      const __m256i g1 =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gen + 8));
      if (half_divides(g1, r1)) {
        hit = 1;
        break;
      }
    }
    mask[r] = hit;
  }
}

constexpr KernelTable kAvx2Table{"avx2", avx2_divides, avx2_lcm,
                                 avx2_quotient, avx2_member_mask};

}  // namespace

const KernelTable* avx2_kernels_impl() noexcept { return &kAvx2Table; }

}  // namespace epslab::simd

#endif  // EPSLAB_HAVE_AVX2 && __AVX2__
