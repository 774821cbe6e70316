#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/permkernel.hpp"

namespace hgs {

/// Thrown when an input value breaks a documented precondition.
struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a configured resource cap is exceeded.
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal invariant that the theory guarantees fails.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A permutation of {0..degree-1}, degree <= 64.
///
/// The image table is always 64 bytes with identity padding past the
/// degree, so composition is one full-width kernel call and comparisons
/// are flat memcmp.
class Perm {
 public:
  static constexpr unsigned kMaxDegree = kernel::kWidth;

  Perm() : deg_(1) { init_identity(); }

  explicit Perm(unsigned degree) : deg_(degree) {
    check_degree(degree);
    init_identity();
  }

  Perm(unsigned degree, std::span<const unsigned> images) : deg_(degree) {
    check_degree(degree);
    if (images.size() != degree)
      throw SpecError("image list length does not match degree");
    init_identity();
    std::array<bool, kMaxDegree> seen{};
    for (unsigned i = 0; i < degree; ++i) {
      if (images[i] >= degree) throw SpecError("image out of range");
      if (seen[images[i]]) throw SpecError("images are not a bijection");
      seen[images[i]] = true;
      img_[i] = static_cast<std::uint8_t>(images[i]);
    }
  }

  static Perm identity(unsigned degree) { return Perm(degree); }

  unsigned degree() const { return deg_; }
  unsigned operator()(unsigned p) const { return img_[p]; }
  const std::uint8_t* data() const { return img_.data(); }

  bool is_identity() const {
    for (unsigned i = 0; i < deg_; ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Function composition: (a*b)(p) = a(b(p)).
  Perm operator*(const Perm& other) const {
    Perm out(*this, other);
    return out;
  }

  Perm inverse() const {
    Perm out(deg_);
    for (unsigned i = 0; i < kMaxDegree; ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return out;
  }

  Perm conjugated_by(const Perm& g) const {  // g * this * g^-1
    return g * (*this * g.inverse());
  }

  unsigned order() const;
  unsigned count_fixed_points() const;
  bool is_fixed_point_free() const { return count_fixed_points() == 0; }

  /// Sorted list of cycle lengths (including length-1 cycles).
  std::vector<unsigned> cycle_type() const;

  /// True when every cycle has the same length (the shape of any element
  /// of a regular group).  Length-1-everywhere (the identity) counts.
  bool has_uniform_cycle_type() const;

  bool operator==(const Perm& o) const {
    return deg_ == o.deg_ && std::memcmp(img_.data(), o.img_.data(), kMaxDegree) == 0;
  }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const {
    if (deg_ != o.deg_) return deg_ < o.deg_;
    return std::memcmp(img_.data(), o.img_.data(), kMaxDegree) < 0;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ deg_;
    const std::uint64_t* w = reinterpret_cast<const std::uint64_t*>(img_.data());
    for (unsigned i = 0; i < kMaxDegree / 8; ++i) {
      h ^= w[i];
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }

  /// Cycle notation with 0-based points, e.g. "(0 1 2)(3 4)"; identity "()" .
  std::string to_cycles() const;
  static Perm from_cycles(unsigned degree, std::string_view text);

  /// Even/odd parity (true = even).
  bool is_even() const;

 private:
  Perm(const Perm& a, const Perm& b) : deg_(a.deg_) {
    if (a.deg_ != b.deg_) throw SpecError("degree mismatch in composition");
    kernel::compose64(a.img_.data(), b.img_.data(), img_.data());
  }

  static void check_degree(unsigned degree) {
    if (degree == 0 || degree > kMaxDegree)
      throw SpecError("degree must be in [1, 64]");
  }

  void init_identity() {
    for (unsigned i = 0; i < kMaxDegree; ++i) img_[i] = static_cast<std::uint8_t>(i);
  }

  unsigned deg_;
  alignas(32) std::array<std::uint8_t, kMaxDegree> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace hgs
