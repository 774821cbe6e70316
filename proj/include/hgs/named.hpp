#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hgs/cayley.hpp"

namespace hgs {

/// Builds a group from the spec grammar:
///
///   atom   := C<n> | D<n> (dihedral of order n, n even) | S<n> | A<n>
///           | Dic<n> | Q8 | E<p>^<k> | Hol(spec) | F20 | F42
///   spec   := factor ('x' factor)*
///   factor := atom | atom ':' atom '@' action
///
/// Actions (the acting atom must be cyclic): "triv", "inv" (first factor
/// abelian), "pow<k>" (first factor cyclic, x -> x^k), "swap" (first
/// factor E<p>^2, exchange coordinates).
CayleyGroup construct_named(std::string_view spec);

struct NamedGroup {
  std::string name;
  CayleyGroup group;
};

/// All isomorphism types of the given order, canonically named and
/// ordered (abelian first by invariant factors, then the curated
/// nonabelian list).  Throws CapError when the catalog is not known to be
/// complete for this order and `require_complete` is set.
const std::vector<NamedGroup>& all_types(unsigned order,
                                         bool require_complete = true);

/// True when the catalog provably lists every type of this order.
bool types_complete(unsigned order);

/// Canonical type name: invariant factors for abelian groups, the
/// catalog name otherwise, a fingerprint string as a last resort.
std::string identify_type(const CayleyGroup& g);

/// Isomorphism test against a named spec.
bool type_matches(const CayleyGroup& g, std::string_view spec);

}  // namespace hgs
