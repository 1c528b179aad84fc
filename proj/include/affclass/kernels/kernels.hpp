#pragma once

#include <cstddef>
#include <cstdint>

namespace affclass::kernels {

// Word-level primitives over packed bit buffers (64 bits per word).
// All entry points accept nwords == 0; dst may alias a or b.
struct Ops {
  const char* name;

  void (*bit_xor)(std::uint64_t* dst, const std::uint64_t* a,
                  const std::uint64_t* b, std::size_t nwords);
  void (*bit_and)(std::uint64_t* dst, const std::uint64_t* a,
                  const std::uint64_t* b, std::size_t nwords);
  void (*bit_not)(std::uint64_t* dst, const std::uint64_t* a,
                  std::size_t nwords);
  // dst[i] ^= src[i]
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t nwords);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
  std::uint64_t (*popcount_xor)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t nwords);
  // In-word butterfly stages of the subset-XOR transform: stage j applies
  // w ^= (w & mask_j) << 2^j to every word, for j = 0..stage_count-1
  // (stage_count <= 6).
  void (*xor_butterfly)(std::uint64_t* w, std::size_t nwords, int stage_count);
};

// Portable reference implementation; always available.
const Ops& scalar();

// Best implementation for the running CPU. The AFFCLASS_KERNELS environment
// variable ("scalar", "avx2", "neon") forces a specific backend; an
// unavailable choice falls back to scalar.
const Ops& active();

bool avx2_available();

#if defined(__x86_64__) || defined(_M_X64)
// Only valid to call when avx2_available() is true.
const Ops& avx2();
#endif

#if defined(__aarch64__)
const Ops& neon();
#endif

// Masks selecting the bits whose in-word index has bit j clear, j = 0..5.
inline constexpr std::uint64_t kButterflyMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

}  // namespace affclass::kernels
