#include <array>
#include <cstdint>
#include <random>

#include "doctest.h"
#include "hgs/perm.hpp"
#include "hgs/permkernel.hpp"

using namespace hgs;

namespace {

std::array<std::uint8_t, 64> random_perm_table(std::mt19937& rng,
                                               unsigned degree) {
  std::array<std::uint8_t, 64> t;
  for (unsigned i = 0; i < 64; ++i) t[i] = static_cast<std::uint8_t>(i);
  for (unsigned i = degree; i-- > 1;) {
    std::uniform_int_distribution<unsigned> d(0, i);
    std::swap(t[i], t[d(rng)]);
  }
  return t;
}

}  // namespace

TEST_CASE("active kernel matches the scalar reference on random tables") {
  std::mt19937 rng(20240811);
  for (unsigned degree = 1; degree <= 64; ++degree) {
    for (int rep = 0; rep < 50; ++rep) {
      auto a = random_perm_table(rng, degree);
      auto b = random_perm_table(rng, degree);
      std::array<std::uint8_t, 64> want{}, got{};
      kernel::compose64_scalar(a.data(), b.data(), want.data());
      kernel::active()(a.data(), b.data(), got.data());
      REQUIRE(want == got);
    }
  }
}

TEST_CASE("kernel handles arbitrary byte tables, not just bijections") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> d(0, 63);
  for (int rep = 0; rep < 200; ++rep) {
    std::array<std::uint8_t, 64> a, b;
    for (auto& v : a) v = static_cast<std::uint8_t>(d(rng));
    for (auto& v : b) v = static_cast<std::uint8_t>(d(rng));
    std::array<std::uint8_t, 64> want{}, got{};
    kernel::compose64_scalar(a.data(), b.data(), want.data());
    kernel::active()(a.data(), b.data(), got.data());
    REQUIRE(want == got);
  }
}

TEST_CASE("kernel name reports something sensible") {
  const std::string name = kernel::active_name();
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
}
