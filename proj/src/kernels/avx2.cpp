#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>
#include <cstddef>
#include <cstdint>

#include "affclass/kernels/kernels.hpp"

// Compiled with -mavx2 for this translation unit only; callers must check
// avx2_available() before dispatching here.

namespace affclass::kernels {
namespace {

void xor_avx2(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void and_avx2(std::uint64_t* dst, const std::uint64_t* a,
              const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_and_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void not_avx2(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(va, ones));
  }
  for (; i < n; ++i) dst[i] = ~a[i];
}

void xor_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                   std::size_t n) {
  xor_avx2(dst, dst, src, n);
}

// Per-byte population counts via a nibble lookup table.
inline __m256i popcount_bytes(__m256i v) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                         _mm256_shuffle_epi8(lut, hi));
}

std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc,
                           _mm256_sad_epu8(popcount_bytes(v),
                                           _mm256_setzero_si256()));
  }
  std::uint64_t total = std::uint64_t(_mm256_extract_epi64(acc, 0)) +
                        std::uint64_t(_mm256_extract_epi64(acc, 1)) +
                        std::uint64_t(_mm256_extract_epi64(acc, 2)) +
                        std::uint64_t(_mm256_extract_epi64(acc, 3));
  for (; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t popcount_xor_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i v = _mm256_xor_si256(va, vb);
    acc = _mm256_add_epi64(acc,
                           _mm256_sad_epu8(popcount_bytes(v),
                                           _mm256_setzero_si256()));
  }
  std::uint64_t total = std::uint64_t(_mm256_extract_epi64(acc, 0)) +
                        std::uint64_t(_mm256_extract_epi64(acc, 1)) +
                        std::uint64_t(_mm256_extract_epi64(acc, 2)) +
                        std::uint64_t(_mm256_extract_epi64(acc, 3));
  for (; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
  return total;
}

void butterfly_avx2(std::uint64_t* w, std::size_t n, int stages) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    for (int j = 0; j < stages; ++j) {
      __m256i mask = _mm256_set1_epi64x(std::int64_t(kButterflyMask[j]));
      __m256i half = _mm256_and_si256(v, mask);
      v = _mm256_xor_si256(v, _mm256_slli_epi64(half, 1 << j));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(w + i), v);
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

const Ops& avx2() {
  static constexpr Ops ops{
      "avx2",         xor_avx2,      and_avx2,          not_avx2,
      xor_into_avx2,  popcount_avx2, popcount_xor_avx2, butterfly_avx2,
  };
  return ops;
}

}  // namespace affclass::kernels

#endif  // x86_64
