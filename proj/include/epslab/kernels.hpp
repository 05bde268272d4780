#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace epslab::simd {

/// Every monomial occupies one fixed block of kBlockLanes unsigned exponents,
/// zero-padded past the ambient arity. All kernels work on whole blocks; a
/// zero pad lane is neutral for divides, lcm and quotient.
inline constexpr std::size_t kBlockLanes = 16;
using ExpBlock = std::array<std::uint32_t, kBlockLanes>;

/// One set of exponent-block kernels. `scalar_kernels()` is the reference
/// implementation; vector variants must be bit-for-bit equivalent to it.
struct KernelTable {
  const char* name;
  /// componentwise a[i] <= b[i] over the whole block ("a divides b")
  bool (*divides)(const std::uint32_t* a, const std::uint32_t* b) noexcept;
  /// out = componentwise max(a, b)
  void (*lcm)(const std::uint32_t* a, const std::uint32_t* b,
              std::uint32_t* out) noexcept;
  /// out = componentwise max(a - b, 0)
  void (*quotient)(const std::uint32_t* a, const std::uint32_t* b,
                   std::uint32_t* out) noexcept;
  /// mask[i] = 1 iff some generator block divides row block i
  void (*member_mask)(const std::uint32_t* rows, std::size_t row_count,
                      const std::uint32_t* gens, std::size_t gen_count,
                      std::uint8_t* mask) noexcept;
};

const KernelTable& scalar_kernels() noexcept;

/// AVX2 variant; nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels() noexcept;

/// Currently selected table. The first call picks the best supported variant,
/// honouring the EPSLAB_SIMD environment variable ("auto", "scalar", "avx2").
const KernelTable& active_kernels() noexcept;

/// Force a variant by name ("auto", "scalar", "avx2"). Throws DomainError for
/// unknown names or variants unavailable on this machine. Not thread-safe
/// with respect to concurrent kernel use; intended for startup and tests.
void select_kernels(std::string_view which);

}  // namespace epslab::simd
