#include "epslab/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "epslab/errors.hpp"

namespace epslab::simd {

namespace {

bool scalar_divides(const std::uint32_t* a, const std::uint32_t* b) noexcept {
  for (std::size_t i = 0; i < kBlockLanes; ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

void scalar_lcm(const std::uint32_t* a, const std::uint32_t* b,
                std::uint32_t* out) noexcept {
  for (std::size_t i = 0; i < kBlockLanes; ++i) {
    out[i] = a[i] > b[i] ? a[i] : b[i];
  }
}

void scalar_quotient(const std::uint32_t* a, const std::uint32_t* b,
                     std::uint32_t* out) noexcept {
  for (std::size_t i = 0; i < kBlockLanes; ++i) {
    out[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  }
}

void scalar_member_mask(const std::uint32_t* rows, std::size_t row_count,
                        const std::uint32_t* gens, std::size_t gen_count,
                        std::uint8_t* mask) noexcept {
  for (std::size_t r = 0; r < row_count; ++r) {
    const std::uint32_t* row = rows + r * kBlockLanes;
    std::uint8_t hit = 0;
    for (std::size_t g = 0; g < gen_count; ++g) {
      if (scalar_divides(gens + g * kBlockLanes, row)) {
        hit = 1;
        break;
      }
    }
    mask[r] = hit;
  }
}

constexpr KernelTable kScalarTable{
    "scalar", scalar_divides, scalar_lcm, scalar_quotient, scalar_member_mask};

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* pick_default() noexcept {
  if (const char* env = std::getenv("EPSLAB_SIMD")) {
    std::string_view v(env);
    if (v == "scalar") return &kScalarTable;
    if (v == "avx2") {
      if (const KernelTable* t = avx2_kernels()) return t;
      return &kScalarTable;  // requested but unavailable: fall back
    }
    // "auto" or anything unrecognised falls through to autodetection
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  return &kScalarTable;
}

}  // namespace

const KernelTable& scalar_kernels() noexcept { return kScalarTable; }

#if defined(EPSLAB_HAVE_AVX2)
// defined in kernels_avx2.cpp
const KernelTable* avx2_kernels_impl() noexcept;

const KernelTable* avx2_kernels() noexcept {
  static const KernelTable* table = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") ? avx2_kernels_impl() : nullptr;
  }();
  return table;
}
#else
const KernelTable* avx2_kernels() noexcept { return nullptr; }
#endif

const KernelTable& active_kernels() noexcept {
  const KernelTable* t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = pick_default();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

void select_kernels(std::string_view which) {
  if (which == "auto") {
    g_active.store(pick_default(), std::memory_order_release);
    return;
  }
  if (which == "scalar") {
    g_active.store(&kScalarTable, std::memory_order_release);
    return;
  }
  if (which == "avx2") {
    if (const KernelTable* t = avx2_kernels()) {
      g_active.store(t, std::memory_order_release);
      return;
    }
    throw DomainError("avx2 kernels are not available on this machine");
  }
  throw DomainError("unknown kernel variant: " + std::string(which));
}

}  // namespace epslab::simd
