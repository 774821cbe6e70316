#include "hgs/permkernel.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace hgs::kernel {

void compose64_scalar(const std::uint8_t* a, const std::uint8_t* b,
                      std::uint8_t* dst) {
  for (unsigned i = 0; i < kWidth; ++i) dst[i] = a[b[i]];
}

#if defined(__aarch64__)
void compose64_neon(const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* dst) {
  uint8x16x4_t table;
  table.val[0] = vld1q_u8(a);
  table.val[1] = vld1q_u8(a + 16);
  table.val[2] = vld1q_u8(a + 32);
  table.val[3] = vld1q_u8(a + 48);
  for (unsigned i = 0; i < kWidth; i += 16) {
    vst1q_u8(dst + i, vqtbl4q_u8(table, vld1q_u8(b + i)));
  }
}
#endif

namespace {

ComposeFn resolve() {
  if (const char* env = std::getenv("HGS_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return &compose64_scalar;
  }
#if defined(HGS_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) return &compose64_avx2;
#endif
#if defined(__aarch64__)
  return &compose64_neon;
#endif
  return &compose64_scalar;
}

}  // namespace

ComposeFn active() {
  static const ComposeFn fn = resolve();
  return fn;
}

const char* active_name() {
  ComposeFn fn = active();
#if defined(HGS_HAVE_AVX2_TU)
  if (fn == &compose64_avx2) return "avx2";
#endif
#if defined(__aarch64__)
  if (fn == &compose64_neon) return "neon";
#endif
  (void)fn;
  return "scalar";
}

}  // namespace hgs::kernel
