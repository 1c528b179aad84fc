#include <bit>
#include <cstddef>
#include <cstdint>

#include "affclass/kernels/kernels.hpp"

namespace affclass::kernels {
namespace {

void xor_scalar(std::uint64_t* dst, const std::uint64_t* a,
                const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

void and_scalar(std::uint64_t* dst, const std::uint64_t* a,
                const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] & b[i];
}

void not_scalar(std::uint64_t* dst, const std::uint64_t* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = ~a[i];
}

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::uint64_t popcount_scalar(const std::uint64_t* a, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t popcount_xor_scalar(const std::uint64_t* a,
                                  const std::uint64_t* b, std::size_t n) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::popcount(a[i] ^ b[i]);
  return total;
}

void butterfly_scalar(std::uint64_t* w, std::size_t n, int stages) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = w[i];
    for (int j = 0; j < stages; ++j) {
      v ^= (v & kButterflyMask[j]) << (std::size_t{1} << j);
    }
    w[i] = v;
  }
}

}  // namespace

const Ops& scalar() {
  static constexpr Ops ops{
      "scalar",         xor_scalar,          and_scalar,      not_scalar,
      xor_into_scalar,  popcount_scalar,     popcount_xor_scalar,
      butterfly_scalar,
  };
  return ops;
}

}  // namespace affclass::kernels
