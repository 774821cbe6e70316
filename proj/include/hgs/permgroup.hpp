#pragma once

#include <optional>
#include <vector>

#include "hgs/perm.hpp"

namespace hgs {

/// A finite subgroup of Sym(degree), stored as the full sorted element
/// list.  Everything handled here has order at most a few thousand, so
/// explicit sets beat stabilizer chains on simplicity and testability.
class PermGroup {
 public:
  PermGroup() : degree_(1) { elements_.push_back(Perm(1)); }

  /// Closure of `gens` inside Sym(degree).
  static PermGroup generate(unsigned degree, const std::vector<Perm>& gens);

  /// Wrap an already-closed element set (verified).
  static PermGroup from_elements(unsigned degree, std::vector<Perm> elements,
                                 bool verify = true);

  unsigned degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;

  /// Transitive with trivial point stabilizers, i.e. order == degree and
  /// one orbit.
  bool is_regular() const;
  bool is_transitive() const;

  /// True iff conjugation by every element of *this maps `other` to
  /// itself.  Checked on generators; closure makes that sufficient.
  bool normalizes(const PermGroup& other) const;

  /// Orbit of one permutation under conjugation by this group's
  /// generators (equals the full conjugation orbit by closure).
  std::vector<Perm> conjugation_orbit(const Perm& seed) const;

  bool operator==(const PermGroup& o) const {
    return degree_ == o.degree_ && elements_ == o.elements_;
  }
  bool operator<(const PermGroup& o) const { return elements_ < o.elements_; }

 private:
  unsigned degree_;
  std::vector<Perm> elements_;  // sorted, canonical
  std::vector<Perm> gens_;
};

/// Image of (a, b) under S_t x S_r -> S_{t*r}, pairing (i1, i2) -> i1*r + i2.
/// The pairing is fixed project-wide; the induced-structure embedding
/// depends on it.
Perm product_embedding(const Perm& a, const Perm& b);

/// All elements of the centralizer of sigma in Sym(degree) whose cycle
/// type is uniform of length `cycle_len` (and hence fixed-point free for
/// cycle_len > 1).  Used to build the candidate pool of the direct
/// regular-subgroup search: every non-identity element of a regular
/// subgroup normalized by a transitive group commutes with some
/// non-identity element of it and has uniform cycle type.
std::vector<Perm> centralizer_uniform_elements(const Perm& sigma,
                                               unsigned cycle_len);

}  // namespace hgs
