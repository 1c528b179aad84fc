#include <cstdlib>
#include <string_view>

#include "affclass/kernels/kernels.hpp"

namespace affclass::kernels {

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && \
    (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Ops& pick() {
  if (const char* env = std::getenv("AFFCLASS_KERNELS")) {
    std::string_view want(env);
    if (want == "scalar") return scalar();
#if defined(__x86_64__) || defined(_M_X64)
    if (want == "avx2" && avx2_available()) return avx2();
#endif
#if defined(__aarch64__)
    if (want == "neon") return neon();
#endif
    return scalar();  // unknown or unavailable request
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2_available()) return avx2();
#elif defined(__aarch64__)
  return neon();
#endif
  return scalar();
}

}  // namespace

const Ops& active() {
  static const Ops& chosen = pick();
  return chosen;
}

}  // namespace affclass::kernels
