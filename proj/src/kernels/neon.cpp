#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "affclass/kernels/kernels.hpp"

namespace affclass::kernels {
namespace {

void xor_neon(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void and_neon(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void not_neon(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  const uint64x2_t ones = vdupq_n_u64(~std::uint64_t{0});
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, veorq_u64(vld1q_u64(a + i), ones));
  }
  for (; i < n; ++i) dst[i] = ~a[i];
}

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t n) {
  xor_neon(dst, dst, src, n);
}

std::uint64_t popcount_neon(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint8x16_t counts = vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i)));
    total += vaddvq_u8(counts);  // at most 128 per vector, no overflow
  }
  for (; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t popcount_xor_neon(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t v = veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    total += vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
  }
  for (; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
  return total;
}

void butterfly_neon(std::uint64_t* w, std::size_t n, int stages) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t v = vld1q_u64(w + i);
    for (int j = 0; j < stages; ++j) {
      uint64x2_t half = vandq_u64(v, vdupq_n_u64(kButterflyMask[j]));
      v = veorq_u64(v, vshlq_u64(half, vdupq_n_s64(1 << j)));
    }
    vst1q_u64(w + i, v);
  }
  for (; i < n; ++i) {
    std::uint64_t v = w[i];
    for (int j = 0; j < stages; ++j) {
      v ^= (v & kButterflyMask[j]) << (std::size_t{1} << j);
    }
    w[i] = v;
  }
}

}  // namespace

const Ops& neon() {
  static constexpr Ops ops{
      "neon",         xor_neon,      and_neon,          not_neon,
      xor_into_neon,  popcount_neon, popcount_xor_neon, butterfly_neon,
  };
  return ops;
}

}  // namespace affclass::kernels

#endif  // __aarch64__
