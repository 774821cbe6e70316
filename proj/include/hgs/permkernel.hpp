#pragma once

// Byte-shuffle kernel behind permutation composition.
//
// Permutations of degree <= 64 are stored as 64-byte image tables padded
// with the identity, so composing two of them is a single 64-byte gather
// dst[i] = a[b[i]].  That gather is the innermost operation of every
// closure, conjugation and normalizer check in this library, and it maps
// directly onto byte-shuffle instructions (vpshufb on x86, tbl on arm).
// A scalar reference kernel is always available; wider variants are picked
// once at startup and must be bit-identical to it (see permkernel_test).

#include <cstdint>

namespace hgs::kernel {

inline constexpr unsigned kWidth = 64;

using ComposeFn = void (*)(const std::uint8_t* a, const std::uint8_t* b,
                           std::uint8_t* dst);

// dst[i] = a[b[i]] for i in [0, 64).  dst must not alias a or b.
void compose64_scalar(const std::uint8_t* a, const std::uint8_t* b,
                      std::uint8_t* dst);

#if defined(HGS_HAVE_AVX2_TU)
void compose64_avx2(const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* dst);
#endif

#if defined(__aarch64__)
void compose64_neon(const std::uint8_t* a, const std::uint8_t* b,
                    std::uint8_t* dst);
#endif

// Active kernel, resolved once per process.  HGS_KERNEL=scalar in the
// environment forces the reference path.
ComposeFn active();
const char* active_name();

inline void compose64(const std::uint8_t* a, const std::uint8_t* b,
                      std::uint8_t* dst) {
  active()(a, b, dst);
}

}  // namespace hgs::kernel
